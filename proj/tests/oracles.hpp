#pragma once

#include "matchkit/arith.hpp"
#include "matchkit/graph.hpp"

#include <vector>

// Brute-force oracles, deliberately independent of the library's
// memoized recursions: plain enumeration only.
namespace oracles {

// m_k by extending partial matchings edge by edge.
std::vector<matchkit::Integer> matching_coefficients(const matchkit::Graph& g);

// i_k by testing every vertex subset.
std::vector<matchkit::Integer> independence_coefficients(const matchkit::Graph& g);

// Perfect matchings of a balanced bipartite graph by trying every bijection.
matchkit::Integer bipartite_pm_by_bijections(const matchkit::Graph& g);

// Root-preserving isomorphism by permutation backtracking.
bool rooted_isomorphic(const matchkit::RootedBall& a, const matchkit::RootedBall& b);

}  // namespace oracles
