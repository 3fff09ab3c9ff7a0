#include "matchkit/arith.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace matchkit {

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid rational literal: '" + text + "'");
  }
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no rational form");
  if (x == 0.0) return Rational(0);
  int exp = 0;
  // 53-bit mantissa scaled to an integer; frexp keeps this exact.
  const double mant = std::frexp(x, &exp);
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(scaled);
  if (exp >= 0) {
    r *= Rational(Integer(1) << exp);
  } else {
    r /= Rational(Integer(1) << -exp);
  }
  return r;
}

double log_integer(const Integer& x) {
  if (x <= 0) throw std::domain_error("log_integer requires a positive value");
  const auto bits = boost::multiprecision::msb(x);
  if (bits <= 900) return std::log(to_double(x));
  const Integer shifted = x >> (bits - 64);
  return std::log(to_double(shifted)) + static_cast<double>(bits - 64) * std::log(2.0);
}

Integer integer_pow(Integer base, unsigned exp) {
  Integer result(1);
  while (exp != 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1u;
  }
  return result;
}

Rational rational_pow(const Rational& base, unsigned exp) {
  return Rational(integer_pow(boost::multiprecision::numerator(base), exp),
                  integer_pow(boost::multiprecision::denominator(base), exp));
}

}  // namespace matchkit
