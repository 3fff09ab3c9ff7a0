#pragma once

#include "matchkit/arith.hpp"
#include "matchkit/canonical.hpp"
#include "matchkit/covers.hpp"
#include "matchkit/graph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace matchkit {

// Exact distribution of r-ball types over all vertices (full enumeration,
// no sampling).
struct BallDistribution {
  int r = 0;
  std::map<BallSignature, long long> counts;
  long long total = 0;
};

BallDistribution ball_distribution(const Graph& g, int r,
                                   int signature_cap = kDefaultCanonicalCap);

// (1/2) sum |freq_a - freq_b| as an exact rational; radii must agree.
Rational tv_distance(const BallDistribution& a, const BallDistribution& b);

// Fraction of vertices within distance r of any touched vertex, in either
// graph: an exact upper bound for the TV distance of the r-ball profiles.
Rational locality_bound(const Graph& a, const Graph& b, const std::vector<int>& touched, int r);

struct ExperimentManifest {
  std::string family;  // cycles | random_regular | random_bipartite_regular |
                       // large_girth_regular | kdd_disjoint
  int d = 3;
  int g_min = 3;
  std::vector<int> sizes;
  int r = 2;
  std::uint64_t seed = 1;
};

struct ExperimentRow {
  std::string id;
  int v = 0;
  std::optional<int> girth;      // absent for forests
  std::vector<long long> cycle_counts;  // k = 3..8
  double ln_m_over_v = 0.0;
  double e_gamma_over_v = 0.0;
  double var_over_v = 0.0;
  Rational nu_over_v;
  double ln_pm_over_v = 0.0;  // -inf when pm = 0
  // Present only for d-regular families with d >= 3.
  std::optional<double> limit_entropy, gap_entropy;
  std::optional<double> limit_expectation, gap_expectation;
  std::optional<double> limit_variance, gap_variance;
  std::optional<double> limit_pm_entropy, gap_pm_entropy;
};

std::vector<ExperimentRow> run_convergence_experiment(const ExperimentManifest& manifest);

std::string experiment_csv_header();
std::string experiment_csv(const std::vector<ExperimentRow>& rows);

struct DivergencePair {
  std::string label;
  int v = 0;
  Rational p_e, p_f;
  Integer pm_base, pm_two, pm_tilde;
  bool pm_tilde_verified = false;  // exact permanent vs identity-derived
  double entropy_two = 0.0, entropy_tilde = 0.0, entropy_gap = 0.0;
  Rational tv;
  Rational tv_bound;
};

struct DivergenceReport {
  int d = 0;
  int r = 1;
  std::vector<DivergencePair> pairs;
};

// Theorem-1.8 style experiment: local statistics nearly agree while the
// pm-entropy per vertex stays bounded apart. Runs the K_{d,d} baseline pair
// and, when exact counting is feasible, the skewed-cover pair.
DivergenceReport run_divergence_experiment(int d, int r);

}  // namespace matchkit
