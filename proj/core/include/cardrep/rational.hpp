#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace cardrep {

using Integer = mpz_class;
using Rational = mpq_class;

/// Arithmetic used by a computation. Chosen once per computation and never mixed.
enum class Arithmetic { exact, floating };

std::string_view to_string(Arithmetic mode);

template <class T>
T from_rational(const Rational& q);

template <>
inline Rational from_rational<Rational>(const Rational& q) {
  return q;
}

template <>
inline double from_rational<double>(const Rational& q) {
  return q.get_d();
}

/// num/den in lowest terms. den must be nonzero.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

inline Rational abs_value(const Rational& q) { return abs(q); }
inline double abs_value(double x) { return std::fabs(x); }

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p/q" or an integer "p"; the result is canonicalized.
Rational parse_rational(std::string_view text);

Rational power(const Rational& base, unsigned exponent);
Integer power(const Integer& base, unsigned exponent);

Integer factorial(int n);

/// Zero outside 0 <= k <= n.
Integer binomial(int n, int k);

}  // namespace cardrep
