#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace matchkit {

// Exact scalar types used throughout the counting/probability code.
// Counts are arbitrary-precision integers, probabilities exact rationals.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when an input exceeds a documented resource cap. The CLI maps
// this to exit code 3; it is never downgraded to an approximation.
class ResourceCapError : public std::runtime_error {
 public:
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

inline double to_double(const Integer& x) { return x.convert_to<double>(); }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

inline std::string to_string(const Integer& x) { return x.str(); }

// "p/q" with the "/q" omitted for integral values, matching boost's
// operator<<; this is the wire format for every exact JSON field.
inline std::string to_string(const Rational& x) { return x.str(); }

Rational parse_rational(const std::string& text);

// Exact binary expansion of an IEEE double as a rational. Lossless, so
// floating-point quadrature weights can live in rational-weight measures.
Rational rational_from_double(double x);

// ln of a positive big integer, accurate to double precision even when the
// value overflows double range.
double log_integer(const Integer& x);

Integer integer_pow(Integer base, unsigned exp);
Rational rational_pow(const Rational& base, unsigned exp);

}  // namespace matchkit
