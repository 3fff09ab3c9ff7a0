#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracles {

using matchkit::Edge;
using matchkit::Graph;
using matchkit::Integer;

namespace {

void extend_matchings(const std::vector<Edge>& edges, size_t from, std::vector<bool>& used,
                      int size, std::vector<Integer>& counts) {
  if (size >= static_cast<int>(counts.size())) counts.resize(size + 1, Integer(0));
  counts[size] += 1;
  for (size_t i = from; i < edges.size(); ++i) {
    const auto& [u, v] = edges[i];
    if (used[u] || used[v]) continue;
    used[u] = used[v] = true;
    extend_matchings(edges, i + 1, used, size + 1, counts);
    used[u] = used[v] = false;
  }
}

}  // namespace

std::vector<Integer> matching_coefficients(const Graph& g) {
  std::vector<Integer> counts{Integer(0)};
  std::vector<bool> used(static_cast<size_t>(g.num_vertices()), false);
  const auto edges = g.edges();
  extend_matchings(edges, 0, used, 0, counts);
  return counts;
}

std::vector<Integer> independence_coefficients(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 24) throw std::invalid_argument("oracle limited to 24 vertices");
  std::vector<Integer> counts;
  for (unsigned subset = 0; subset < (1u << n); ++subset) {
    bool independent = true;
    for (const auto& [u, v] : g.edges()) {
      if ((subset >> u & 1) && (subset >> v & 1)) {
        independent = false;
        break;
      }
    }
    if (!independent) continue;
    const int size = std::popcount(subset);
    if (size >= static_cast<int>(counts.size())) counts.resize(size + 1, Integer(0));
    counts[size] += 1;
  }
  return counts;
}

Integer bipartite_pm_by_bijections(const Graph& g) {
  const auto sides = matchkit::bipartition(g);
  if (!sides || sides->first.size() != sides->second.size()) {
    throw std::invalid_argument("oracle needs a balanced bipartite graph");
  }
  const auto& [left, right] = *sides;
  std::vector<int> perm(right.begin(), right.end());
  std::sort(perm.begin(), perm.end());
  Integer count(0);
  do {
    bool all = true;
    for (size_t i = 0; i < left.size(); ++i) {
      if (!g.has_edge(left[i], perm[i])) {
        all = false;
        break;
      }
    }
    if (all) count += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map,
                        std::vector<bool>& used, int next) {
  const int n = a.num_vertices();
  if (next == n) return true;
  for (int candidate = 0; candidate < n; ++candidate) {
    if (used[candidate]) continue;
    if (a.degree(next) != b.degree(candidate)) continue;
    bool consistent = true;
    for (int prev = 0; prev < next && consistent; ++prev) {
      if (a.has_edge(prev, next) != b.has_edge(map[prev], candidate)) consistent = false;
    }
    if (!consistent) continue;
    map[next] = candidate;
    used[candidate] = true;
    if (extend_isomorphism(a, b, map, used, next + 1)) return true;
    used[candidate] = false;
  }
  return false;
}

}  // namespace

bool rooted_isomorphic(const matchkit::RootedBall& a, const matchkit::RootedBall& b) {
  const int n = a.graph.num_vertices();
  if (n != b.graph.num_vertices() || a.graph.num_edges() != b.graph.num_edges()) return false;
  // Relabel so the roots are vertex 0 on both sides, then backtrack.
  auto rooted_first = [](const matchkit::RootedBall& ball) {
    std::vector<int> order;
    order.push_back(ball.root);
    for (int v = 0; v < ball.graph.num_vertices(); ++v) {
      if (v != ball.root) order.push_back(v);
    }
    return ball.graph.induced_subgraph(order);
  };
  const Graph ga = rooted_first(a);
  const Graph gb = rooted_first(b);
  if (ga.degree(0) != gb.degree(0)) return false;
  std::vector<int> map(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  map[0] = 0;
  used[0] = true;
  return extend_isomorphism(ga, gb, map, used, 1);
}

}  // namespace oracles
