#pragma once

#include "matchkit/arith.hpp"

#include <vector>

namespace matchkit {

// Dense polynomials, index = degree. Integer coefficients for counting,
// rational ones for exact gcd/square-free work.
using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
void poly_trim(IntPoly& p);
Integer poly_eval(const IntPoly& p, const Integer& x);

RatPoly to_rational(const IntPoly& p);
void poly_trim(RatPoly& p);
int poly_degree(const RatPoly& p);  // -1 for the zero polynomial
RatPoly poly_derivative(const RatPoly& p);
RatPoly poly_monic(const RatPoly& p);
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);
// Exact division; throws if the remainder is nonzero.
RatPoly poly_div_exact(const RatPoly& a, const RatPoly& b);
RatPoly poly_gcd(RatPoly a, RatPoly b);  // monic gcd

// Yun's algorithm: pairwise-coprime monic square-free factors with their
// multiplicities, i.e. p = lc * prod factor_i^{mult_i}.
struct SquareFreeFactor {
  RatPoly factor;
  int multiplicity;
};
std::vector<SquareFreeFactor> square_free_decomposition(const RatPoly& p);

double poly_eval(const RatPoly& p, double x);
long double poly_eval(const RatPoly& p, long double x);

}  // namespace matchkit
