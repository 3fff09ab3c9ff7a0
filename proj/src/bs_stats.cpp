#include "matchkit/bs_stats.hpp"

#include "matchkit/counting.hpp"
#include "matchkit/generators.hpp"
#include "matchkit/mckay.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace matchkit {

BallDistribution ball_distribution(const Graph& g, int r, int signature_cap) {
  if (r < 0) throw std::invalid_argument("ball_distribution: negative radius");
  BallDistribution dist;
  dist.r = r;
  dist.total = g.num_vertices();
  for (int v = 0; v < g.num_vertices(); ++v) {
    ++dist.counts[canonical_signature(extract_ball(g, v, r), signature_cap)];
  }
  return dist;
}

Rational tv_distance(const BallDistribution& a, const BallDistribution& b) {
  if (a.r != b.r) throw std::invalid_argument("tv_distance: radius mismatch");
  if (a.total == 0 || b.total == 0) throw std::invalid_argument("tv_distance: empty distribution");
  std::set<BallSignature> keys;
  for (const auto& [key, count] : a.counts) keys.insert(key);
  for (const auto& [key, count] : b.counts) keys.insert(key);
  Rational sum(0);
  for (const auto& key : keys) {
    const auto ia = a.counts.find(key);
    const auto ib = b.counts.find(key);
    const Rational fa = ia == a.counts.end() ? Rational(0) : Rational(ia->second, a.total);
    const Rational fb = ib == b.counts.end() ? Rational(0) : Rational(ib->second, b.total);
    sum += fa >= fb ? fa - fb : fb - fa;
  }
  return sum / 2;
}

Rational locality_bound(const Graph& a, const Graph& b, const std::vector<int>& touched, int r) {
  if (a.num_vertices() != b.num_vertices()) {
    throw std::invalid_argument("locality_bound: vertex sets differ");
  }
  std::vector<bool> close(static_cast<size_t>(a.num_vertices()), false);
  for (const Graph* g : {&a, &b}) {
    for (int t : touched) {
      const auto dist = distances_from(*g, t);
      for (int v = 0; v < g->num_vertices(); ++v) {
        if (dist[v] != -1 && dist[v] <= r) close[v] = true;
      }
    }
  }
  const auto count = std::count(close.begin(), close.end(), true);
  return Rational(static_cast<long long>(count), a.num_vertices());
}

namespace {

struct FamilyGraph {
  std::string id;
  Graph graph;
  bool regular_with_limits = false;
  int d = 0;
};

FamilyGraph instantiate(const ExperimentManifest& manifest, int size, std::uint64_t seed) {
  FamilyGraph out;
  std::ostringstream id;
  if (manifest.family == "cycles") {
    id << "cycle_n" << size;
    out.graph = make_cycle(size);
  } else if (manifest.family == "random_regular") {
    id << "random_regular_v" << size << "_d" << manifest.d << "_s" << seed;
    out.graph = random_regular(size, manifest.d, seed);
    out.regular_with_limits = manifest.d >= 3;
    out.d = manifest.d;
  } else if (manifest.family == "random_bipartite_regular") {
    id << "random_bipartite_regular_n" << size << "_d" << manifest.d << "_s" << seed;
    out.graph = random_bipartite_regular(size, manifest.d, seed);
    out.regular_with_limits = manifest.d >= 3;
    out.d = manifest.d;
  } else if (manifest.family == "large_girth_regular") {
    id << "large_girth_v" << size << "_d" << manifest.d << "_g" << manifest.g_min << "_s" << seed;
    out.graph = large_girth_regular(size, manifest.d, manifest.g_min, seed);
    out.regular_with_limits = manifest.d >= 3;
    out.d = manifest.d;
  } else if (manifest.family == "kdd_disjoint") {
    id << "kdd_disjoint_k" << size << "_d" << manifest.d;
    Graph block = make_complete_bipartite(manifest.d, manifest.d);
    Graph acc = block;
    for (int i = 1; i < size; ++i) acc = disjoint_union(acc, block);
    out.graph = std::move(acc);
    out.regular_with_limits = manifest.d >= 3;
    out.d = manifest.d;
  } else {
    throw std::invalid_argument("unknown family: " + manifest.family);
  }
  out.id = id.str();
  return out;
}

}  // namespace

std::vector<ExperimentRow> run_convergence_experiment(const ExperimentManifest& manifest) {
  std::vector<ExperimentRow> rows;
  std::uint64_t seed = manifest.seed;
  for (int size : manifest.sizes) {
    const FamilyGraph fg = instantiate(manifest, size, seed++);
    ExperimentRow row;
    row.id = fg.id;
    row.v = fg.graph.num_vertices();
    row.girth = girth(fg.graph);
    for (int k = 3; k <= 8; ++k) row.cycle_counts.push_back(count_cycles(fg.graph, k));
    const MatchingStats stats = matching_stats(fg.graph);
    row.ln_m_over_v = stats.entropy_per_vertex;
    row.e_gamma_over_v = stats.expected_size_normalized;
    row.var_over_v = stats.variance_normalized;
    row.nu_over_v = stats.matching_ratio;
    row.ln_pm_over_v = stats.pm_entropy_per_vertex;
    if (fg.regular_with_limits) {
      const auto limits = mckay::theorem_limits(fg.d);
      row.limit_entropy = limits.entropy_limit;
      row.gap_entropy = std::abs(row.ln_m_over_v - limits.entropy_limit);
      row.limit_expectation = limits.expectation_limit;
      row.gap_expectation = std::abs(row.e_gamma_over_v - limits.expectation_limit);
      row.limit_variance = limits.variance_limit;
      row.gap_variance = std::abs(row.var_over_v - limits.variance_limit);
      row.limit_pm_entropy = limits.pm_entropy_limit;
      row.gap_pm_entropy = std::abs(row.ln_pm_over_v - limits.pm_entropy_limit);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string format_double(double x) {
  if (x == -std::numeric_limits<double>::infinity()) return "-inf";
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

std::string format_optional(const std::optional<double>& x) {
  return x ? format_double(*x) : std::string();
}

}  // namespace

std::string experiment_csv_header() {
  return "id,v,girth,lnM_over_v,Egamma_over_v,Var_over_v,nu_over_v,lnpm_over_v,"
         "limit_entropy,gap_entropy,limit_expectation,gap_expectation,"
         "limit_variance,gap_variance,limit_pm_entropy,gap_pm_entropy,"
         "c3,c4,c5,c6,c7,c8";
}

std::string experiment_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << experiment_csv_header() << "\n";
  for (const auto& row : rows) {
    out << row.id << ',' << row.v << ',';
    if (row.girth) out << *row.girth;
    out << ',' << format_double(row.ln_m_over_v) << ',' << format_double(row.e_gamma_over_v) << ','
        << format_double(row.var_over_v) << ',' << to_string(row.nu_over_v) << ','
        << format_double(row.ln_pm_over_v) << ',' << format_optional(row.limit_entropy) << ','
        << format_optional(row.gap_entropy) << ',' << format_optional(row.limit_expectation) << ','
        << format_optional(row.gap_expectation) << ',' << format_optional(row.limit_variance) << ','
        << format_optional(row.gap_variance) << ',' << format_optional(row.limit_pm_entropy) << ','
        << format_optional(row.gap_pm_entropy);
    for (long long c : row.cycle_counts) out << ',' << c;
    out << "\n";
  }
  return out.str();
}

namespace {

DivergencePair gap_pair_report(const std::string& label, const Graph& g, Edge e, Edge f, int r) {
  DivergencePair pair;
  pair.label = label;
  const GapPair built = build_gap_pair(g, e, f);
  pair.v = built.two_g.num_vertices();
  pair.p_e = edge_probability(g, e);
  pair.p_f = edge_probability(g, f);
  pair.pm_base = pm_count(g);
  pair.pm_two = pair.pm_base * pair.pm_base;
  const Rational mixture = pair.p_e * pair.p_f + (1 - pair.p_e) * (1 - pair.p_f);
  const Rational predicted = Rational(pair.pm_two) * mixture;
  if (boost::multiprecision::denominator(predicted) != 1) {
    throw std::logic_error("pm identity did not produce an integer");
  }
  pair.pm_tilde = boost::multiprecision::numerator(predicted);
  const auto sides = bipartition(built.tilde_g);
  if (sides && sides->first.size() == sides->second.size() &&
      static_cast<int>(sides->first.size()) <= kPermanentSideCap) {
    pair.pm_tilde_verified = permanent_pm_count(built.tilde_g) == pair.pm_tilde;
    if (!pair.pm_tilde_verified) throw std::logic_error("pm identity failed an exact check");
  }
  pair.entropy_two = log_integer(pair.pm_two) / pair.v;
  pair.entropy_tilde = pair.pm_tilde > 0 ? log_integer(pair.pm_tilde) / pair.v
                                         : -std::numeric_limits<double>::infinity();
  pair.entropy_gap = pair.entropy_two - pair.entropy_tilde;
  pair.tv = tv_distance(ball_distribution(built.two_g, r), ball_distribution(built.tilde_g, r));
  pair.tv_bound = locality_bound(built.two_g, built.tilde_g, built.touched, r);
  return pair;
}

}  // namespace

DivergenceReport run_divergence_experiment(int d, int r) {
  if (d < 3) throw std::invalid_argument("divergence experiment needs d >= 3");
  DivergenceReport report;
  report.d = d;
  report.r = r;
  {
    const Graph kdd = make_complete_bipartite(d, d);
    report.pairs.push_back(gap_pair_report("kdd_baseline", kdd, Edge{0, d}, Edge{0, d + 1}, r));
  }
  if (d == 3) {
    const SkewedBuild skew = build_skewed_graph(d);
    // Adjacent edge at the tracked vertex: second fan coordinate.
    const Edge e = skew.edge;
    Edge f{-1, -1};
    const int shared = e.first;
    for (int w : skew.graph.neighbors(shared)) {
      if (w != e.second) {
        f = Edge{std::min(shared, w), std::max(shared, w)};
        break;
      }
    }
    report.pairs.push_back(gap_pair_report("skewed_d3", skew.graph, e, f, r));
  }
  return report;
}

}  // namespace matchkit
