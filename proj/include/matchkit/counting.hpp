#pragma once

#include "matchkit/arith.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/intpoly.hpp"

#include <vector>

namespace matchkit {

// Hard defaults for the exact-counting resource caps. Exceeding a cap is an
// error, never a silent approximation.
inline constexpr int kCountingVertexCap = 40;
inline constexpr int kPermanentSideCap = 26;
inline constexpr int kIdentityCheckVertexCap = 12;

enum class CoefficientKind { matching, independence };

// Exact coefficient sequence: coeffs[k] = m_k(G) or i_k(G).
struct CoefficientVector {
  CoefficientKind kind = CoefficientKind::matching;
  std::vector<Integer> coeffs;
  int num_vertices = 0;

  int top_index() const { return static_cast<int>(coeffs.size()) - 1; }
};

// m_k(G) via the vertex-removal recursion
//   M(G,t) = M(G - v, t) + t * sum_{u ~ v} M(G - v - u, t)
// with multiplicative splitting over components and bitmask memoization.
CoefficientVector matching_coefficients(const Graph& g, int vertex_cap = kCountingVertexCap);

// i_k(G) via I(G) = I(G - v) + x * I(G - N[v]) on a max-degree pivot.
CoefficientVector independence_coefficients(const Graph& g, int vertex_cap = kCountingVertexCap);

// m_k(G) = i_k(L(G)) for all k.
bool verify_transfer_identity(const Graph& g, int vertex_cap = kCountingVertexCap);

struct MatchingStats {
  Integer total_matchings;
  double entropy_per_vertex = 0.0;        // ln M(G) / v
  double expected_size_normalized = 0.0;  // E gamma_G / v
  double variance_normalized = 0.0;       // D^2 gamma_G / v
  Rational matching_ratio;                // nu(G) / v
  Integer pm_count;
  double pm_entropy_per_vertex = 0.0;  // -inf when pm(G) = 0
};

MatchingStats matching_stats(const Graph& g, int vertex_cap = kCountingVertexCap);
MatchingStats stats_from_coefficients(const CoefficientVector& c);

// Number of threads exact permanents may use; partial sums are combined in
// fixed index order over exact integers, so results are thread-count
// independent. Set once from the CLI.
void set_max_threads(int threads);
int max_threads();

// Ryser's inclusion-exclusion permanent of the biadjacency matrix of a
// balanced bipartite graph. Equals m_{v/2}(G).
Integer permanent_pm_count(const Graph& g, int side_cap = kPermanentSideCap);

// pm(G) for any graph: permanent when balanced bipartite, top matching
// coefficient otherwise; 0 on odd vertex counts.
Integer pm_count(const Graph& g);

// p(e) = pm(G - u - v) / pm(G); requires pm(G) > 0.
Rational edge_probability(const Graph& g, Edge e);

// P(e in M) over all matchings M: M(G - u - v) / M(G).
Rational all_matchings_edge_probability(const Graph& g, Edge e);

bool claw_free(const Graph& g);

// Matching polynomial mu(G,x) = sum_k (-1)^k m_k x^(v-2k) as a dense poly.
IntPoly matching_polynomial(const CoefficientVector& matching);

// Characteristic polynomial of the adjacency matrix, exact integers.
IntPoly adjacency_charpoly(const Graph& g);

// phi(G,x) = sum over 2-regular subgraphs C of (-2)^{#components} mu(G\C,x).
bool verify_cycle_sum_identity(const Graph& g, int vertex_cap = kIdentityCheckVertexCap);

std::vector<std::vector<Edge>> enumerate_perfect_matchings(const Graph& g, size_t limit);

}  // namespace matchkit
