#include "cardrep/gl_beta.hpp"

#include <array>
#include <map>
#include <set>

#include "cardrep/errors.hpp"

namespace cardrep {

Integer gl_order(int n, int q) {
  if (n < 1 || q < 2) throw ArgumentError("gl_order: need n >= 1 and q >= 2");
  const Integer qn = power(Integer(q), static_cast<unsigned>(n));
  Integer out = 1;
  for (int i = 0; i < n; ++i) out *= qn - power(Integer(q), static_cast<unsigned>(i));
  return out;
}

GLClassDatum::GLClassDatum(int n, int q, Partition lambda_z1, int residual_weight)
    : n_(n), q_(q), lambda_(std::move(lambda_z1)), residual_(residual_weight) {
  if (n < 1 || q < 2) throw ArgumentError("GL class datum: need n >= 1 and q >= 2");
  if (residual_ < 0 || lambda_.size() + residual_ != n)
    throw ArgumentError("GL class datum: |lambda| + residual weight must equal n");
  if (q == 2 && residual_ == 1) throw ArgumentError("GL class datum: residual weight 1 cannot occur for q = 2");
}

Rational gl_class_ratio(const GLClassDatum& d) {
  const int m1 = d.lambda_z1().multiplicity(1);
  if (m1 == 0) return Rational(0);
  const int n = d.n();
  const Integer q = d.q();
  const Integer sub = n > 1 ? gl_order(n - 1, d.q()) : Integer(1);
  const Integer qm = power(q, static_cast<unsigned>(m1));
  const unsigned e = static_cast<unsigned>(2 * d.lambda_z1().length() - 1);
  // (1 - q^-m1) q^e = (q^m1 - 1) q^e / q^m1
  return ratio(sub * (qm - 1) * power(q, e), gl_order(n, d.q()) * qm);
}

Rational gl_beta_closed_form(int n, int q) {
  if (n < 2) throw ArgumentError("gl_beta_closed_form: need n >= 2");
  if (q < 2) throw ArgumentError("gl_beta_closed_form: need q >= 2");
  const int shift = q == 2 ? n - 2 : n - 1;
  const Rational top = Rational(1) - ratio(Integer(1), power(Integer(q), static_cast<unsigned>(shift)));
  const Rational bottom = Rational(q * q) * (Rational(1) - ratio(Integer(1), power(Integer(q), static_cast<unsigned>(n))));
  Rational out = top / bottom;
  out.canonicalize();
  return out;
}

GLBetaResult gl_beta_brute_force(int n, int q) {
  if (n < 2) throw ArgumentError("gl_beta_brute_force: need n >= 2");
  if (q < 2) throw ArgumentError("gl_beta_brute_force: need q >= 2");
  GLBetaResult out;
  out.beta = 0;
  for (int size = 1; size <= n; ++size) {
    const int residual = n - size;
    if (q == 2 && residual == 1) continue;
    for (const auto& lambda : enumerate_partitions(size)) {
      if (lambda.multiplicity(1) == 0) continue;
      GLClassDatum d(n, q, lambda, residual);
      if (d.is_identity()) continue;
      const Rational value = gl_class_ratio(d);
      if (value > out.beta) {
        out.beta = value;
        out.witnesses.clear();
      }
      if (value == out.beta && value > 0) out.witnesses.push_back(d);
    }
  }
  return out;
}

namespace {

using Matrix2 = std::array<int, 4>;  // row-major a b / c d

Matrix2 multiply(const Matrix2& x, const Matrix2& y, int q) {
  return {(x[0] * y[0] + x[1] * y[2]) % q, (x[0] * y[1] + x[1] * y[3]) % q, (x[2] * y[0] + x[3] * y[2]) % q,
          (x[2] * y[1] + x[3] * y[3]) % q};
}

int determinant(const Matrix2& x, int q) { return ((x[0] * x[3] - x[1] * x[2]) % q + q) % q; }

Matrix2 inverse(const Matrix2& x, int q) {
  const int det = determinant(x, q);
  int inv = 1;
  while ((det * inv) % q != 1) ++inv;
  return {(x[3] * inv) % q, ((q - x[1]) % q * inv) % q, ((q - x[2]) % q * inv) % q, (x[0] * inv) % q};
}

}  // namespace

Rational gl2_direct_beta(int q) {
  if (q != 2 && q != 3) throw ArgumentError("gl2_direct_beta: q must be 2 or 3");
  std::vector<Matrix2> group;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d)
          if (Matrix2 m{a, b, c, d}; determinant(m, q) != 0) group.push_back(m);

  std::set<Matrix2> subgroup;
  for (int a = 1; a < q; ++a) subgroup.insert(Matrix2{a, 0, 0, 1});

  const Matrix2 identity{1, 0, 0, 1};
  std::set<Matrix2> seen;
  Rational beta = 0;
  for (const auto& x : group) {
    if (seen.count(x)) continue;
    std::set<Matrix2> orbit;
    for (const auto& g : group) orbit.insert(multiply(multiply(g, x, q), inverse(g, q), q));
    seen.insert(orbit.begin(), orbit.end());
    if (orbit.count(identity)) continue;
    std::size_t inside = 0;
    for (const auto& y : orbit) inside += subgroup.count(y);
    beta = std::max(beta, Rational(ratio(Integer(static_cast<unsigned long>(inside)),
                                         Integer(static_cast<unsigned long>(orbit.size())))));
  }
  return beta;
}

}  // namespace cardrep
