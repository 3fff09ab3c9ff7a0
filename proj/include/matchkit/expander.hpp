#pragma once

#include "matchkit/arith.hpp"
#include "matchkit/graph.hpp"

#include <optional>
#include <vector>

namespace matchkit {

inline constexpr int kExpansionSideCap = 20;

// Largest delta for which the bipartite vertex-expansion definition holds,
// with the subset achieving the minimum ratio. `vacuous` means no subset is
// eligible (a side of size <= 1), so every delta works.
struct ExpanderReport {
  Rational delta;
  bool vacuous = false;
  std::vector<int> witness;
  int witness_side = 0;  // 0 = first class, 1 = second class
};

// Exact best delta = min over nonempty S with 2|S| <= |side| of
// |N(S)|/|S| - 1, both sides, by subset exhaustion.
ExpanderReport compute_delta(const Graph& g, int side_cap = kExpansionSideCap);

// Same exhaustion over a digraph, taking min(|N_in|, |N_out|).
ExpanderReport compute_directed_delta(const Digraph& dg, int side_cap = kExpansionSideCap);

using PerfectMatching = std::vector<Edge>;

// Digraph on the second vertex class: arc x -> y iff the matched partner u
// of x has y as a neighbor. Self-arcs (always present) are excluded; they
// correspond to the matched edge itself, not to a cycle.
Digraph matched_digraph(const Graph& g, const PerfectMatching& m);

// Shortest directed cycle through the arc (u, v): 1 + dist(v, u).
std::optional<int> shortest_cycle_through_arc(const Digraph& dg, int u, int v);

// Shortest cycle alternating along m that contains e; absent when e lies in
// no alternating cycle (p(e) in {0,1}).
std::optional<int> shortest_alternating_cycle_through(const Graph& g, const PerfectMatching& m,
                                                      Edge e);

struct Theorem19Result {
  bool applicable = false;  // false when delta = 0 or vacuous
  Rational delta;
  Rational p_exact;
  double bound = 0.0;  // (1/d) n^(-2 ln(d-1)/ln(1+delta))
  bool holds = false;
};

Theorem19Result theorem19_check(const Graph& g, Edge e);

struct Prop65Result {
  Rational probability;  // P(e in M) over uniform random matchings
  Rational bound;        // 1/(d^2+1)
  bool holds = false;
};

Prop65Result prop65_check(const Graph& g, Edge e);

struct EdgeProbabilityExtremes {
  Rational p_min;
  Rational p_max;
  Edge argmin;
  Edge argmax;
};

EdgeProbabilityExtremes edge_probability_extremes(const Graph& g);

}  // namespace matchkit
