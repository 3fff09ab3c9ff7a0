#include "matchkit/covers.hpp"

#include "matchkit/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace matchkit {

namespace {

void require_regular_bipartite(const Graph& g, const char* what) {
  if (!g.is_regular()) throw std::invalid_argument(std::string(what) + ": graph is not regular");
  if (!bipartition(g)) throw std::invalid_argument(std::string(what) + ": graph is not bipartite");
}

}  // namespace

CoverResult n_fold_cover(const CoverSpec& spec) {
  const Graph& base = spec.base;
  require_regular_bipartite(base, "n_fold_cover");
  if (!base.has_edge(spec.edge.first, spec.edge.second)) {
    throw std::invalid_argument("n_fold_cover: edge not in base graph");
  }
  if (spec.fold < 1) throw std::invalid_argument("n_fold_cover: fold must be >= 1");
  if (pm_count(base) == 0) throw std::invalid_argument("n_fold_cover: base has no perfect matching");

  const int v = base.num_vertices();
  const int n = spec.fold;
  const auto [x, y] = spec.edge;
  Graph cover(n * v);
  for (int copy = 0; copy < n; ++copy) {
    const int offset = copy * v;
    for (const auto& [a, b] : base.edges()) {
      if (a == std::min(x, y) && b == std::max(x, y)) continue;
      cover.add_edge(offset + a, offset + b);
    }
  }
  CoverResult result;
  for (int copy = 0; copy < n; ++copy) {
    const int to = ((copy + 1) % n) * v + y;
    const int from = copy * v + x;
    cover.add_edge(from, to);
    result.new_edges.emplace_back(std::min(from, to), std::max(from, to));
  }
  result.graph = std::move(cover);
  return result;
}

Rational cover_edge_probability_formula(const Rational& p, int n) {
  if (!(p > 0 && p < 1)) throw std::invalid_argument("formula needs 0 < p < 1");
  if (n < 1) throw std::invalid_argument("formula needs n >= 1");
  const Rational pn = rational_pow(p, static_cast<unsigned>(n));
  const Rational qn = rational_pow(Rational(1) - p, static_cast<unsigned>(n));
  return pn / (pn + qn);
}

RationalVector apply_T(int index, int n, const RationalVector& v) {
  if (index < 0 || index >= static_cast<int>(v.size())) {
    throw std::invalid_argument("apply_T: coordinate out of range");
  }
  if (n < 1) throw std::invalid_argument("apply_T: fold must be >= 1");
  const Rational p = v[static_cast<size_t>(index)];
  if (!(p > 0 && p < 1)) {
    throw std::invalid_argument("apply_T: pivot coordinate must lie in (0,1)");
  }
  for (const auto& entry : v) {
    if (!(entry > 0 && entry <= 1)) throw std::invalid_argument("apply_T: entries must lie in (0,1]");
  }
  const Rational q = Rational(1) - p;
  const Rational pn = rational_pow(p, static_cast<unsigned>(n));
  const Rational qn = rational_pow(q, static_cast<unsigned>(n));
  // Odds form with x = (1-p)/p: new pivot 1/(x^n+1); the other entries pick
  // up the factor x^(n-1)(x+1)/(x^n+1) = (1-p)^(n-1) / (p^n + (1-p)^n).
  const Rational factor = rational_pow(q, static_cast<unsigned>(n - 1)) / (pn + qn);
  RationalVector out(v);
  for (auto& entry : out) entry *= factor;
  out[static_cast<size_t>(index)] = pn / (pn + qn);
  return out;
}

RationalVector apply_T_sequence(const std::vector<TStep>& steps, RationalVector v) {
  for (const auto& [index, fold] : steps) v = apply_T(index, fold, v);
  return v;
}

std::vector<TStep> find_T_sequence(int d) {
  if (d < 3) throw std::invalid_argument("find_T_sequence needs d >= 3");
  // Fixed base case: T_2^(3) T_3^(2) applied to (1/3,1/3,1/3) has first
  // coordinate 18/35 > 1/2.
  std::vector<TStep> steps{{2, 2}, {1, 3}};
  for (int dim = 4; dim <= d; ++dim) {
    constexpr int kFoldBudget = 64;
    bool found = false;
    for (int fold = 1; fold <= kFoldBudget; ++fold) {
      std::vector<TStep> candidate;
      candidate.push_back({dim - 1, fold});
      candidate.insert(candidate.end(), steps.begin(), steps.end());
      const RationalVector image =
          apply_T_sequence(candidate, RationalVector(static_cast<size_t>(dim), Rational(1, dim)));
      if (image[0] > Rational(1, 2)) {
        steps = std::move(candidate);
        found = true;
        break;
      }
    }
    if (!found) throw ResourceCapError("find_T_sequence: fold search budget exhausted");
  }
  return steps;
}

DistinguishedEdgeGraph build_theorem52_graph(int d, int n, bool simple) {
  if (d < 1) throw std::invalid_argument("build_theorem52_graph: d must be >= 1");
  if (n < 1) {
    // n = 0 would be the empty graph with no distinguished edge.
    throw std::invalid_argument("build_theorem52_graph: fold must be >= 1");
  }
  DistinguishedEdgeGraph out;
  out.predicted_p = Rational(1, integer_pow(d - 1, static_cast<unsigned>(n)) + 1);
  if (!simple) {
    // The 2-point base of the non-simple variant is a multigraph for d >= 2;
    // only the d <= 2 outputs are themselves simple graphs.
    if (d == 1) {
      Graph g(2 * n);
      for (int k = 0; k < n; ++k) g.add_edge(k, n + k);
      out.graph = std::move(g);
      out.edge = {0, n};
    } else if (d == 2) {
      if (n < 2) throw std::invalid_argument("build_theorem52_graph: 2-point variant needs n >= 2");
      out.graph = make_cycle(2 * n);
      out.edge = {0, 1};
    } else {
      throw std::invalid_argument(
          "build_theorem52_graph: non-simple variant is a multigraph for d >= 3");
    }
  } else {
    const Graph base = make_complete_bipartite(d, d);
    if (n == 1) {
      out.graph = base;
      out.edge = {0, d};
    } else {
      auto cover = n_fold_cover({base, Edge{0, d}, n});
      out.graph = std::move(cover.graph);
      out.edge = cover.new_edges.front();
    }
  }
  const auto sides = bipartition(out.graph);
  if (sides && sides->first.size() == sides->second.size() &&
      static_cast<int>(sides->first.size()) <= kPermanentSideCap) {
    out.verified = edge_probability(out.graph, out.edge) == out.predicted_p;
  }
  return out;
}

SkewedBuild build_skewed_graph(int d) {
  SkewedBuild build;
  build.sequence = find_T_sequence(d);
  Graph g = make_complete_bipartite(d, d);
  int anchor = 0;
  std::vector<Edge> fan;
  for (int j = 0; j < d; ++j) fan.push_back({0, d + j});
  RationalVector p(static_cast<size_t>(d), Rational(1, d));
  for (const auto& [index, fold] : build.sequence) {
    const Edge e = fan[static_cast<size_t>(index)];
    const int old_size = g.num_vertices();
    // Edges at the anchor are (anchor, other); the cover keeps copy 0 ids,
    // so only the covered edge gets replaced by its cross edge.
    const int other = e.first == anchor ? e.second : e.first;
    auto cover = n_fold_cover({g, e, fold});
    g = std::move(cover.graph);
    fan[static_cast<size_t>(index)] =
        fold == 1 ? e : Edge{std::min(anchor, old_size + other), std::max(anchor, old_size + other)};
    p = apply_T(index, fold, p);
  }
  build.graph = std::move(g);
  build.edge = fan[0];
  build.probabilities = p;
  build.predicted_p = p[0];
  build.half_size = build.graph.num_vertices() / 2;
  build.implied_c =
      std::pow(to_double(Rational(1) / build.predicted_p - 1), 1.0 / build.half_size);
  const auto sides = bipartition(build.graph);
  if (sides && sides->first.size() == sides->second.size() &&
      static_cast<int>(sides->first.size()) <= kPermanentSideCap) {
    build.verified = edge_probability(build.graph, build.edge) == build.predicted_p;
  }
  return build;
}

GapPair build_gap_pair(const Graph& g, Edge e, Edge f) {
  require_regular_bipartite(g, "build_gap_pair");
  if (!g.has_edge(e.first, e.second) || !g.has_edge(f.first, f.second)) {
    throw std::invalid_argument("build_gap_pair: e and f must be edges");
  }
  const bool share_first = e.first == f.first || e.first == f.second;
  const bool share_second = e.second == f.first || e.second == f.second;
  if (e == f || !(share_first ^ share_second)) {
    throw std::invalid_argument("build_gap_pair: e and f must be adjacent distinct edges");
  }
  if (pm_count(g) == 0) throw std::invalid_argument("build_gap_pair: no perfect matching");

  const auto sides = bipartition(g);
  std::vector<bool> in_left(static_cast<size_t>(g.num_vertices()), false);
  for (int v : sides->first) in_left[v] = true;
  auto oriented = [&](Edge edge) {
    return in_left[edge.first] ? edge : Edge{edge.second, edge.first};
  };
  const auto [ue, ve] = oriented(e);  // ue in U, ve in V
  const auto [uf, vf] = oriented(f);

  GapPair pair;
  pair.two_g = disjoint_union(g, g);
  const int offset = g.num_vertices();
  Graph tilde = pair.two_g.without_edge(std::min(ue, ve), std::max(ue, ve));
  tilde = tilde.without_edge(offset + std::min(uf, vf), offset + std::max(uf, vf));
  tilde.add_edge(ue, offset + vf);
  tilde.add_edge(ve, offset + uf);
  pair.tilde_g = std::move(tilde);
  pair.touched = {ue, ve, offset + uf, offset + vf};
  std::sort(pair.touched.begin(), pair.touched.end());
  return pair;
}

}  // namespace matchkit
