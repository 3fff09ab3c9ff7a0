#pragma once

#include "matchkit/arith.hpp"
#include "matchkit/graph.hpp"

#include <vector>

namespace matchkit {

// Exact probability vector of the d edges at a vertex; entries in (0,1].
using RationalVector = std::vector<Rational>;

struct CoverSpec {
  Graph base;
  Edge edge;     // must be present in base
  int fold = 1;  // n >= 1
};

struct CoverResult {
  Graph graph;
  std::vector<Edge> new_edges;  // the n rewired edges, copy order
};

// Construction: n disjoint copies of the base, every copy of `edge` erased,
// d-regularity restored by cyclic cross edges copy_k(x) -> copy_{k+1}(y).
// Base must be d-regular bipartite with pm > 0.
CoverResult n_fold_cover(const CoverSpec& spec);

// p(e') = p^n / (p^n + (1-p)^n), i.e. 1/(x^n + 1) in odds form.
Rational cover_edge_probability_formula(const Rational& p, int n);

// Image of the probability vector under the cover at coordinate `index`
// (0-based): that entry p maps to p^n/(p^n+(1-p)^n), the others scale by
// (1-p)^(n-1) / ((1-p)^n + p^n). Entry `index` must lie in (0,1).
RationalVector apply_T(int index, int n, const RationalVector& v);

struct TStep {
  int index = 0;  // 0-based coordinate
  int fold = 1;
};

// Sequence of cover maps driving the first coordinate above 1/2, found by
// the induction on d: the base d = 3 sequence is fixed, each further
// dimension prepends the smallest working fold. Steps are in application
// order (first step applied first).
std::vector<TStep> find_T_sequence(int d);

RationalVector apply_T_sequence(const std::vector<TStep>& steps, RationalVector v);

struct DistinguishedEdgeGraph {
  Graph graph;
  Edge edge;
  Rational predicted_p;  // exact value implied by the construction
  bool verified = false; // exact permanent check ran and matched
};

// Iterated cover of K_{d,d} realizing p(e) = 1/((d-1)^n + 1) on 2dn
// vertices. simple=false requests the 2-point-base variant, which is only
// representable as a simple graph for d <= 2.
DistinguishedEdgeGraph build_theorem52_graph(int d, int n, bool simple = true);

struct SkewedBuild {
  Graph graph;
  Edge edge;
  RationalVector probabilities;  // full vector at the tracked vertex
  Rational predicted_p;          // first coordinate, > 1/2
  std::vector<TStep> sequence;
  bool verified = false;
  int half_size = 0;   // n0 with v = 2 n0
  double implied_c = 0.0;  // (1/p - 1)^(1/n0)
};

// Realizes find_T_sequence(d) as actual covers of K_{d,d}; the returned
// edge has p(e) > 1/2 (18/35 for d = 3), permanent-verified when within
// the counting caps.
SkewedBuild build_skewed_graph(int d);

struct GapPair {
  Graph two_g;    // disjoint double
  Graph tilde_g;  // e dropped in copy 1, f in copy 2, two cross edges added
  std::vector<int> touched;  // endpoints of the modified edges, shared ids
};

// Requires e, f adjacent edges of a d-regular bipartite graph with pm > 0.
// pm(tilde) = pm(G)^2 (p(e)p(f) + (1-p(e))(1-p(f))) holds exactly.
GapPair build_gap_pair(const Graph& g, Edge e, Edge f);

}  // namespace matchkit
