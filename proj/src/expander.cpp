#include "matchkit/expander.hpp"

#include "matchkit/counting.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace matchkit {

namespace {

// Min over nonempty S subset of `side` with 2|S| <= |side| of the expansion
// ratio reported by `neighborhood_size`; deterministic subset order.
template <typename NeighborhoodSize>
void scan_side(const std::vector<int>& side, int which, NeighborhoodSize&& neighborhood_size,
               ExpanderReport& report, bool& any) {
  const int k = static_cast<int>(side.size());
  if (k > 63) throw ResourceCapError("expansion side too large for subset exhaustion");
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << k); ++subset) {
    const int size = std::popcount(subset);
    if (2 * size > k) continue;
    const int expansion = neighborhood_size(subset);
    const Rational ratio(expansion - size, size);
    if (any && ratio >= report.delta) continue;
    report.delta = ratio;
    report.witness.clear();
    for (int i = 0; i < k; ++i) {
      if (subset >> i & 1) report.witness.push_back(side[static_cast<size_t>(i)]);
    }
    report.witness_side = which;
    any = true;
  }
}

std::vector<std::uint64_t> membership_masks(const std::vector<int>& members, int universe) {
  std::vector<std::uint64_t> index(static_cast<size_t>(universe), 0);
  for (size_t i = 0; i < members.size(); ++i) index[members[i]] = std::uint64_t{1} << i;
  return index;
}

}  // namespace

ExpanderReport compute_delta(const Graph& g, int side_cap) {
  const auto sides = bipartition(g);
  if (!sides) throw std::invalid_argument("compute_delta: graph is not bipartite");
  const auto& [left, right] = *sides;
  if (static_cast<int>(left.size()) > side_cap || static_cast<int>(right.size()) > side_cap) {
    throw ResourceCapError("compute_delta: side exceeds cap " + std::to_string(side_cap));
  }
  ExpanderReport report;
  report.delta = 0;
  bool any = false;
  for (int which = 0; which < 2; ++which) {
    const auto& own = which == 0 ? left : right;
    const auto& other = which == 0 ? right : left;
    const auto other_bit = membership_masks(other, g.num_vertices());
    std::vector<std::uint64_t> nbr_mask(own.size(), 0);
    for (size_t i = 0; i < own.size(); ++i) {
      for (int w : g.neighbors(own[i])) nbr_mask[i] |= other_bit[w];
    }
    scan_side(own, which,
              [&](std::uint64_t subset) {
                std::uint64_t seen = 0;
                for (size_t i = 0; i < own.size(); ++i) {
                  if (subset >> i & 1) seen |= nbr_mask[i];
                }
                return std::popcount(seen);
              },
              report, any);
  }
  report.vacuous = !any;
  return report;
}

ExpanderReport compute_directed_delta(const Digraph& dg, int side_cap) {
  const int n = dg.num_vertices();
  if (n > side_cap) throw ResourceCapError("compute_directed_delta: size exceeds cap");
  std::vector<int> all(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) all[i] = i;
  std::vector<std::uint64_t> out_mask(static_cast<size_t>(n), 0), in_mask(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (int w : dg.out_neighbors(v)) out_mask[v] |= std::uint64_t{1} << w;
    for (int w : dg.in_neighbors(v)) in_mask[v] |= std::uint64_t{1} << w;
  }
  ExpanderReport report;
  report.delta = 0;
  bool any = false;
  scan_side(all, 0,
            [&](std::uint64_t subset) {
              std::uint64_t out_seen = 0, in_seen = 0;
              for (int i = 0; i < n; ++i) {
                if (subset >> i & 1) {
                  out_seen |= out_mask[i];
                  in_seen |= in_mask[i];
                }
              }
              return std::min(std::popcount(out_seen), std::popcount(in_seen));
            },
            report, any);
  report.vacuous = !any;
  return report;
}

Digraph matched_digraph(const Graph& g, const PerfectMatching& m) {
  const auto sides = bipartition(g);
  if (!sides) throw std::invalid_argument("matched_digraph: graph is not bipartite");
  const auto& [left, right] = *sides;
  if (left.size() != right.size()) throw std::invalid_argument("matched_digraph: unbalanced sides");
  if (m.size() * 2 != static_cast<size_t>(g.num_vertices())) {
    throw std::invalid_argument("matched_digraph: matching does not cover the graph");
  }
  std::vector<int> partner(static_cast<size_t>(g.num_vertices()), -1);
  for (const auto& [a, b] : m) {
    if (!g.has_edge(a, b) || partner[a] != -1 || partner[b] != -1) {
      throw std::invalid_argument("matched_digraph: not a perfect matching of g");
    }
    partner[a] = b;
    partner[b] = a;
  }
  std::vector<int> class_index(static_cast<size_t>(g.num_vertices()), -1);
  for (size_t i = 0; i < right.size(); ++i) class_index[right[i]] = static_cast<int>(i);
  Digraph dg(static_cast<int>(right.size()));
  for (size_t i = 0; i < right.size(); ++i) {
    const int x = right[i];
    const int u = partner[x];  // matched partner in the first class
    for (int y : g.neighbors(u)) {
      if (y == x) continue;  // self-arc: the matched edge itself
      dg.add_arc(static_cast<int>(i), class_index[y]);
    }
  }
  return dg;
}

std::optional<int> shortest_cycle_through_arc(const Digraph& dg, int u, int v) {
  if (!dg.has_arc(u, v)) throw std::invalid_argument("shortest_cycle_through_arc: no such arc");
  std::vector<int> dist(static_cast<size_t>(dg.num_vertices()), -1);
  std::deque<int> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (x == u) return 1 + dist[u];
    for (int y : dg.out_neighbors(x)) {
      if (dist[y] == -1) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return std::nullopt;
}

std::optional<int> shortest_alternating_cycle_through(const Graph& g, const PerfectMatching& m,
                                                      Edge e) {
  if (!g.has_edge(e.first, e.second)) {
    throw std::invalid_argument("shortest_alternating_cycle_through: not an edge");
  }
  const auto sides = bipartition(g);
  if (!sides) throw std::invalid_argument("shortest_alternating_cycle_through: not bipartite");
  const auto& right = sides->second;
  std::vector<int> partner(static_cast<size_t>(g.num_vertices()), -1);
  for (const auto& [a, b] : m) {
    partner[a] = b;
    partner[b] = a;
  }
  std::vector<int> class_index(static_cast<size_t>(g.num_vertices()), -1);
  for (size_t i = 0; i < right.size(); ++i) class_index[right[i]] = static_cast<int>(i);
  const Digraph dg = matched_digraph(g, m);

  auto in_right = [&](int v) { return class_index[v] != -1; };
  const int x = in_right(e.first) ? e.first : e.second;   // endpoint in the digraph class
  const int u = in_right(e.first) ? e.second : e.first;   // endpoint in the matched class
  std::optional<int> best;
  if (partner[u] == x) {
    // Matched edge: alternating cycles through it are directed cycles
    // through the vertex x, i.e. through any of its out-arcs.
    for (int y : dg.out_neighbors(class_index[x])) {
      const auto len = shortest_cycle_through_arc(dg, class_index[x], y);
      if (len && (!best || *len < *best)) best = len;
    }
  } else {
    // Non-matching edge (u, x'): the 2-path partner(u) -M- u -E- x is one arc.
    const int from = class_index[partner[u]];
    const int to = class_index[x];
    const auto len = shortest_cycle_through_arc(dg, from, to);
    if (len) best = len;
  }
  if (!best) return std::nullopt;
  return 2 * *best;
}

Theorem19Result theorem19_check(const Graph& g, Edge e) {
  Theorem19Result result;
  const auto report = compute_delta(g);
  result.delta = report.delta;
  if (report.vacuous || report.delta <= 0) return result;
  const auto sides = bipartition(g);
  if (sides->first.size() != sides->second.size() || sides->first.size() < 2) {
    throw std::invalid_argument("theorem19_check: needs equal sides with n >= 2");
  }
  const int n = static_cast<int>(sides->first.size());
  const int d = g.max_degree();
  result.applicable = true;
  result.p_exact = edge_probability(g, e);
  const double exponent =
      -2.0 * std::log(static_cast<double>(d - 1)) / std::log1p(to_double(report.delta));
  result.bound = std::pow(static_cast<double>(n), exponent) / d;
  result.holds = to_double(result.p_exact) >= result.bound;
  return result;
}

Prop65Result prop65_check(const Graph& g, Edge e) {
  Prop65Result result;
  result.probability = all_matchings_edge_probability(g, e);
  const int d = g.max_degree();
  result.bound = Rational(1, d * d + 1);
  result.holds = result.probability >= result.bound;
  return result;
}

EdgeProbabilityExtremes edge_probability_extremes(const Graph& g) {
  const auto edges = g.edges();
  if (edges.empty()) throw std::invalid_argument("edge_probability_extremes: no edges");
  EdgeProbabilityExtremes extremes;
  bool first = true;
  for (const auto& e : edges) {
    const Rational p = edge_probability(g, e);
    if (first || p < extremes.p_min) {
      extremes.p_min = p;
      extremes.argmin = e;
    }
    if (first || p > extremes.p_max) {
      extremes.p_max = p;
      extremes.argmax = e;
    }
    first = false;
  }
  return extremes;
}

}  // namespace matchkit
