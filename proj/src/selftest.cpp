#include "matchkit/selftest.hpp"

#include "matchkit/counting.hpp"
#include "matchkit/enumerate.hpp"
#include "matchkit/measures.hpp"

#include <cmath>
#include <ostream>

namespace matchkit {

namespace {

bool close(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

// Every dual-route identity the library exposes, on one graph.
bool check_graph(const Graph& g, std::ostream& log) {
  const int v = g.num_vertices();
  bool ok = true;
  auto fail = [&](const char* what) {
    log << "  identity failure: " << what << " on a " << v << "-vertex graph\n";
    ok = false;
  };

  const auto matching = matching_coefficients(g);
  const auto independence = independence_coefficients(g);
  if (matching.coeffs[0] != 1 || independence.coeffs[0] != 1) fail("unit constant term");
  if (!verify_transfer_identity(g)) fail("transfer identity m_k(G) = i_k(L(G))");
  if (!verify_cycle_sum_identity(g)) fail("cycle-sum identity");

  for (const auto& e : g.edges()) {
    const auto minus_edge = matching_coefficients(g.without_edge(e.first, e.second));
    const auto minus_ends = matching_coefficients(g.without_vertices({e.first, e.second}));
    for (int k = 0; k <= matching.top_index(); ++k) {
      Integer expect = k < static_cast<int>(minus_edge.coeffs.size()) ? minus_edge.coeffs[k] : 0;
      if (k >= 1 && k - 1 < static_cast<int>(minus_ends.coeffs.size())) {
        expect += minus_ends.coeffs[static_cast<size_t>(k - 1)];
      }
      if (matching.coeffs[static_cast<size_t>(k)] != expect) {
        fail("edge recursion m_k(G) = m_k(G-e) + m_{k-1}(G-u-v)");
        break;
      }
    }
  }

  const auto stats = stats_from_coefficients(matching);
  const auto measure = matching_measure(matching);
  const auto mstats = stats_from_measure(measure, CoefficientKind::matching);
  if (!close(stats.entropy_per_vertex, mstats.entropy_per_vertex)) fail("matching entropy identity");
  if (!close(stats.expected_size_normalized, mstats.expected_size_normalized)) {
    fail("matching expectation identity");
  }
  if (!close(stats.variance_normalized, mstats.variance_normalized)) fail("matching variance identity");
  if (!close(to_double(stats.matching_ratio), mstats.ratio)) fail("matching ratio identity");
  const double pm_entropy = pm_entropy_from_measure(measure);
  if (stats.pm_count > 0 ? !close(stats.pm_entropy_per_vertex, pm_entropy)
                         : std::isfinite(pm_entropy)) {
    fail("pm entropy identity");
  }
  if (!heilmann_lieb_check(g)) fail("Heilmann-Lieb root bound");
  if (!dobrushin_bound_check(g)) fail("Dobrushin root bound");
  for (double R : {2.0, 4.0, 8.0}) {
    if (!tail_bound_check(g, R)) fail("independence tail bound");
  }

  if (claw_free(g)) {
    const auto istats_direct = [&] {
      Integer total(0), weighted(0), weighted_sq(0);
      for (size_t k = 0; k < independence.coeffs.size(); ++k) {
        total += independence.coeffs[k];
        weighted += Integer(k) * independence.coeffs[k];
        weighted_sq += Integer(k) * Integer(k) * independence.coeffs[k];
      }
      MeasureStats direct;
      direct.entropy_per_vertex = log_integer(total) / v;
      const Rational mean(weighted, total);
      direct.expected_size_normalized = to_double(mean / v);
      direct.variance_normalized = to_double((Rational(weighted_sq, total) - mean * mean) / v);
      direct.ratio = to_double(Rational(independence.top_index(), v));
      return direct;
    }();
    const auto imeasure = independence_measure(independence);
    const auto istats = stats_from_measure(imeasure, CoefficientKind::independence);
    if (!close(istats_direct.entropy_per_vertex, istats.entropy_per_vertex)) {
      fail("independence entropy identity");
    }
    if (!close(istats_direct.expected_size_normalized, istats.expected_size_normalized)) {
      fail("independence expectation identity");
    }
    if (!close(istats_direct.variance_normalized, istats.variance_normalized)) {
      fail("independence variance identity");
    }
    if (!close(istats_direct.ratio, istats.ratio)) fail("independence ratio identity");
  }

  const auto sides = bipartition(g);
  if (v % 2 == 0 && sides && sides->first.size() == sides->second.size()) {
    Integer from_coeffs =
        matching.top_index() == v / 2 ? matching.coeffs.back() : Integer(0);
    if (permanent_pm_count(g) != from_coeffs) fail("permanent vs matching coefficient");
  }

  if (stats.pm_count > 0) {
    for (int u = 0; u < v; ++u) {
      Rational sum(0);
      for (int w : g.neighbors(u)) {
        sum += edge_probability(g, Edge{std::min(u, w), std::max(u, w)});
      }
      if (sum != 1) {
        fail("edge probabilities at a vertex sum to 1");
        break;
      }
    }
  }

  if (g.num_edges() > 0) {
    const int d = g.max_degree();
    const Rational bound(1, d * d + 1);
    for (const auto& e : g.edges()) {
      if (all_matchings_edge_probability(g, e) < bound) {
        fail("all-matchings probability below 1/(d^2+1)");
        break;
      }
    }
  }

  const auto newton = moments_from_coefficients(matching, 8);
  const auto walks = tree_like_walk_moments(g, 8);
  if (newton.values != walks.values) fail("tree-like walk moments vs Newton identities");

  return ok;
}

}  // namespace

SelfTestReport run_identity_suite(std::ostream& log, int max_vertices) {
  SelfTestReport report;
  for (int n = 1; n <= max_vertices; ++n) {
    const auto graphs = all_graphs(n);
    for (const auto& g : graphs) {
      ++report.graphs_checked;
      if (!check_graph(g, log)) ++report.failures;
    }
    log << "v=" << n << ": " << graphs.size() << " graphs checked, cumulative failures "
        << report.failures << "\n";
  }
  return report;
}

}  // namespace matchkit
