#include "cardrep/rational.hpp"

#include <cctype>

#include "cardrep/errors.hpp"

namespace cardrep {

std::string_view to_string(Arithmetic mode) {
  return mode == Arithmetic::exact ? "exact" : "floating";
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational power(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

Integer power(const Integer& base, unsigned exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Integer factorial(int n) {
  if (n < 0) throw ArgumentError("factorial of a negative number");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Integer(0);
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

}  // namespace cardrep
