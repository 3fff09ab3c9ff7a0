#pragma once

#include "matchkit/arith.hpp"
#include "matchkit/counting.hpp"
#include "matchkit/graph.hpp"

#include <vector>

namespace matchkit {

// Finite atomic measure; locations are polished roots, weights exact
// rationals (multiplicity / v), so masses add up exactly.
struct AtomicMeasure {
  struct Atom {
    double location = 0.0;
    Rational weight;
  };
  std::vector<Atom> atoms;  // sorted by location
  Rational total_mass;

  Rational weight_at_zero() const;
};

// Thrown when a root solve does not certify (residual, separation or
// realness tolerances missed).
class RootSolveError : public std::runtime_error {
 public:
  explicit RootSolveError(const std::string& what) : std::runtime_error(what) {}
};

// Uniform distribution on the roots of mu(G,x): mass 1, symmetric atoms at
// +-sqrt(y) for the roots y of the reduced polynomial, exact weight at 0.
AtomicMeasure matching_measure(const Graph& g, int vertex_cap = kCountingVertexCap);
AtomicMeasure matching_measure(const CoefficientVector& matching);

// Atoms at the real roots of I(G,x) with weight multiplicity / v; total
// mass alpha(G)/v. Throws RootSolveError when complex roots appear
// (possible for non-claw-free inputs).
AtomicMeasure independence_measure(const Graph& g, int vertex_cap = kCountingVertexCap);
AtomicMeasure independence_measure(const CoefficientVector& independence);

// All matching-measure atoms obey |x| <= 2 sqrt(d-1) with d = max(2, degree bound).
bool heilmann_lieb_check(const Graph& g);

// Every root of I(G,x) has modulus above beta = exp(-1)/(d+1); complex
// roots allowed (companion-matrix moduli).
bool dobrushin_bound_check(const Graph& g);

// sigma_G(|x| >= R) <= ln(1/beta)/ln R for R > 1.
bool tail_bound_check(const Graph& g, double R);

struct MeasureStats {
  double entropy_per_vertex = 0.0;
  double expected_size_normalized = 0.0;
  double variance_normalized = 0.0;
  double ratio = 0.0;  // matching ratio nu/v, or independence mass alpha/v
};

MeasureStats stats_from_measure(const AtomicMeasure& m, CoefficientKind kind);

// integral of ln|x|; -inf when an atom sits at 0.
double pm_entropy_from_measure(const AtomicMeasure& m);

// Power sums of the matching-polynomial roots, exact rationals, normalized
// per vertex when `per_vertex` is set.
struct MomentSequence {
  std::vector<Rational> values;  // p_0 .. p_K
  bool per_vertex = true;
};

inline constexpr int kMomentCap = 64;
inline constexpr int kWalkMomentCap = 16;

// Newton's identities on the elementary symmetric functions read off mu(G,x).
MomentSequence moments_from_coefficients(const CoefficientVector& matching, int K);

// p_k via closed tree-like walks counted by depth-first recursion over
// self-avoiding-path states. Exponential in K; capped at 16.
MomentSequence tree_like_walk_moments(const Graph& g, int K);

// Gauss rule matching the first 2*nodes moments: exact rational Chebyshev
// recurrence, then a symmetric tridiagonal eigensolve. If the underlying
// measure has fewer support points the rule truncates to it exactly.
AtomicMeasure quadrature_from_moments(const MomentSequence& moments, int nodes);

}  // namespace matchkit
