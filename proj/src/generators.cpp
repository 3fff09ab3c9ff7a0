#include "matchkit/generators.hpp"

#include "matchkit/arith.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace matchkit {

std::uint64_t DetRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("zero bound");
  std::uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  while (true) {
    const std::uint64_t candidate = next() & mask;
    if (candidate < bound) return candidate;
  }
}

namespace {

constexpr int kPairingAttempts = 20000;
constexpr int kSwitchRounds = 4000;

std::optional<Graph> pairing_attempt(int n, int d, DetRng& rng) {
  std::vector<int> stubs;
  stubs.reserve(static_cast<size_t>(n) * d);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < d; ++i) stubs.push_back(v);
  }
  rng.shuffle(stubs);
  Graph g(n);
  for (size_t i = 0; i < stubs.size(); i += 2) {
    const int u = stubs[i], v = stubs[i + 1];
    if (u == v || g.has_edge(u, v)) return std::nullopt;
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace

Graph random_regular(int n, int d, std::uint64_t seed) {
  if (n <= 0 || d < 0) throw std::invalid_argument("random_regular: need n > 0, d >= 0");
  if (d >= n) throw std::invalid_argument("random_regular: d must be < n");
  if ((static_cast<long long>(n) * d) % 2 != 0) {
    throw std::invalid_argument("random_regular: n*d must be even");
  }
  DetRng rng(seed);
  for (int attempt = 0; attempt < kPairingAttempts; ++attempt) {
    if (auto g = pairing_attempt(n, d, rng)) return *g;
  }
  throw ResourceCapError("random_regular: rejection budget exhausted");
}

Graph random_bipartite_regular(int n_per_side, int d, std::uint64_t seed) {
  if (n_per_side <= 0 || d < 0) throw std::invalid_argument("random_bipartite_regular: bad sizes");
  if (d > n_per_side) throw std::invalid_argument("random_bipartite_regular: d must be <= side size");
  DetRng rng(seed);
  const int n = n_per_side;
  for (int attempt = 0; attempt < kPairingAttempts; ++attempt) {
    Graph g(2 * n);
    bool simple = true;
    for (int k = 0; k < d && simple; ++k) {
      std::vector<int> perm(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) perm[i] = i;
      rng.shuffle(perm);
      for (int i = 0; i < n; ++i) {
        if (g.has_edge(i, n + perm[i])) {
          simple = false;
          break;
        }
        g.add_edge(i, n + perm[i]);
      }
    }
    if (simple) return g;
  }
  throw ResourceCapError("random_bipartite_regular: rejection budget exhausted");
}

namespace {

// Rewires {a,b},{c,d} -> {a,d},{c,b}; keeps the graph simple or reports
// failure without touching it.
bool try_switch(Graph& g, Edge e1, Edge e2) {
  const auto [a, b] = e1;
  const auto [c, d] = e2;
  if (a == c || a == d || b == c || b == d) return false;
  if (g.has_edge(a, d) || g.has_edge(c, b)) return false;
  Graph next = g.without_edge(a, b).without_edge(c, d);
  next.add_edge(a, d);
  next.add_edge(c, b);
  g = std::move(next);
  return true;
}

}  // namespace

Graph large_girth_regular(int n, int d, int g_min, std::uint64_t seed) {
  if (g_min < 3) throw std::invalid_argument("large_girth_regular: g_min must be >= 3");
  DetRng rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    auto base = pairing_attempt(n, d, rng);
    if (!base) continue;
    Graph g = *base;
    bool done = false;
    int stuck = 0;
    for (int round = 0; round < kSwitchRounds && stuck < 200; ++round) {
      const auto shortest = girth_with_cycle(g);
      if (!shortest || shortest->first >= g_min) {
        done = true;
        break;
      }
      const auto& cycle = shortest->second;
      const size_t pick = rng.below(cycle.size());
      const Edge on_cycle{std::min(cycle[pick], cycle[(pick + 1) % cycle.size()]),
                          std::max(cycle[pick], cycle[(pick + 1) % cycle.size()])};
      const auto all_edges = g.edges();
      const Edge other = all_edges[rng.below(all_edges.size())];
      const bool flipped = rng.below(2) == 1;
      const bool applied = try_switch(g, on_cycle, flipped ? Edge{other.second, other.first} : other);
      stuck = applied ? 0 : stuck + 1;
    }
    if (done) {
      const auto final_girth = girth(g);
      if (!final_girth || *final_girth >= g_min) return g;
    }
  }
  throw ResourceCapError("large_girth_regular: budget exhausted (parameters may be infeasible)");
}

Graph random_bipartite(int n_per_side, int prob_num, int prob_den, std::uint64_t seed) {
  if (n_per_side <= 0 || prob_den <= 0 || prob_num < 0 || prob_num > prob_den) {
    throw std::invalid_argument("random_bipartite: bad parameters");
  }
  DetRng rng(seed);
  const int n = n_per_side;
  Graph g(2 * n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (rng.below(static_cast<std::uint64_t>(prob_den)) < static_cast<std::uint64_t>(prob_num)) {
        g.add_edge(u, n + v);
      }
    }
  }
  return g;
}

}  // namespace matchkit
