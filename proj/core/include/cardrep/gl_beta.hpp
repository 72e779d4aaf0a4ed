#pragma once

#include <vector>

#include "cardrep/partitions.hpp"
#include "cardrep/rational.hpp"

namespace cardrep {

/// |GL(n, q)| = prod_{i<n} (q^n - q^i). Requires n >= 1, q >= 2.
Integer gl_order(int n, int q);

/// Conjugacy data of GL(n, q) that matters for the subgroup GL(n-1, q): the
/// partition attached to the polynomial z - 1 and the total degree carried by
/// every other polynomial.
class GLClassDatum {
 public:
  /// Throws ArgumentError unless |lambda_z1| + residual_weight = n. For q = 2
  /// a residual weight of 1 is rejected: z - 1 is the only linear polynomial
  /// with nonzero constant term.
  GLClassDatum(int n, int q, Partition lambda_z1, int residual_weight);

  int n() const noexcept { return n_; }
  int q() const noexcept { return q_; }
  const Partition& lambda_z1() const noexcept { return lambda_; }
  int residual_weight() const noexcept { return residual_; }
  bool is_identity() const noexcept { return residual_ == 0 && lambda_ == Partition::column(n_); }

  friend bool operator==(const GLClassDatum&, const GLClassDatum&) = default;

 private:
  int n_;
  int q_;
  Partition lambda_;
  int residual_;
};

/// |C n GL(n-1,q)| / |C| = (|GL(n-1,q)| / |GL(n,q)|) (1 - q^-m1) q^(2 l - 1),
/// m1 the number of parts equal to 1 and l the number of parts of lambda_z1;
/// 0 when m1 = 0.
Rational gl_class_ratio(const GLClassDatum& datum);

/// (1 - q^-(n-1)) / (q^2 (1 - q^-n)) for q > 2; (1 - q^-(n-2)) / (q^2 (1 - q^-n))
/// for q = 2. Throws ArgumentError for n < 2.
Rational gl_beta_closed_form(int n, int q);

struct GLBetaResult {
  Rational beta;
  std::vector<GLClassDatum> witnesses;  ///< empty when no feasible datum meets the subgroup
};

/// Maximum of gl_class_ratio over every feasible non-identity datum with m1 >= 1.
GLBetaResult gl_beta_brute_force(int n, int q);

/// beta for GL(1,q) inside GL(2,q) by enumerating all invertible 2x2 matrices
/// over the prime field and their conjugacy classes. q must be 2 or 3.
Rational gl2_direct_beta(int q);

}  // namespace cardrep
