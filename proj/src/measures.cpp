#include "matchkit/measures.hpp"

#include "matchkit/intpoly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace matchkit {

namespace {

long double eval_long(const RatPoly& p, long double x) { return poly_eval(p, x); }

long double coefficient_scale(const RatPoly& p, long double x) {
  long double scale = 0.0L, pow = 1.0L;
  for (const auto& c : p) {
    scale += std::fabs(static_cast<long double>(to_double(c))) * pow;
    pow *= std::fabs(x) > 1.0L ? std::fabs(x) : 1.0L;
  }
  return scale > 0.0L ? scale : 1.0L;
}

std::vector<std::complex<double>> companion_eigenvalues(const RatPoly& monic) {
  const int m = poly_degree(monic);
  if (m <= 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
  for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < m; ++i) companion(i, m - 1) = -to_double(monic[static_cast<size_t>(i)]);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw RootSolveError("companion eigensolve failed");
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) out.push_back(solver.eigenvalues()(i));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

// Certified real roots of a square-free monic factor: companion solve,
// long-double Newton polish, then residual / separation / realness checks.
std::vector<double> certified_real_roots(const RatPoly& monic_square_free) {
  const auto raw = companion_eigenvalues(monic_square_free);
  const RatPoly derivative = poly_derivative(monic_square_free);
  std::vector<double> roots;
  roots.reserve(raw.size());
  for (const auto& z : raw) {
    if (std::abs(z.imag()) > 1e-8 * (1.0 + std::abs(z))) {
      throw RootSolveError("complex root where a real one was expected");
    }
    long double x = z.real();
    for (int iter = 0; iter < 64; ++iter) {
      const long double fx = eval_long(monic_square_free, x);
      const long double dfx = eval_long(derivative, x);
      if (dfx == 0.0L) break;
      const long double step = fx / dfx;
      x -= step;
      if (std::fabs(step) <= 1e-20L * (1.0L + std::fabs(x))) break;
    }
    const long double residual = std::fabs(eval_long(monic_square_free, x));
    if (residual > 1e-12L * coefficient_scale(monic_square_free, x)) {
      throw RootSolveError("root residual above certification tolerance");
    }
    roots.push_back(static_cast<double>(x));
  }
  std::sort(roots.begin(), roots.end());
  for (size_t i = 1; i < roots.size(); ++i) {
    if (roots[i] - roots[i - 1] <= 1e-10 * (1.0 + std::abs(roots[i]))) {
      throw RootSolveError("roots of a square-free factor failed to separate");
    }
  }
  return roots;
}

struct RootWithMultiplicity {
  double location;
  int multiplicity;
};

std::vector<RootWithMultiplicity> exact_multiplicity_roots(const RatPoly& poly) {
  std::vector<RootWithMultiplicity> out;
  for (const auto& [factor, multiplicity] : square_free_decomposition(poly)) {
    for (double root : certified_real_roots(factor)) out.push_back({root, multiplicity});
  }
  return out;
}

}  // namespace

Rational AtomicMeasure::weight_at_zero() const {
  for (const auto& atom : atoms) {
    if (atom.location == 0.0) return atom.weight;
  }
  return Rational(0);
}

AtomicMeasure matching_measure(const CoefficientVector& matching) {
  if (matching.kind != CoefficientKind::matching) {
    throw std::invalid_argument("matching_measure needs matching coefficients");
  }
  const int v = matching.num_vertices;
  if (v == 0) throw std::invalid_argument("matching measure undefined for the empty graph");
  const int nu = matching.top_index();
  // mu(G,x) = x^(v-2*nu) q(x^2) with q(y) = sum_k (-1)^k m_k y^(nu-k).
  RatPoly q(static_cast<size_t>(nu) + 1);
  for (int k = 0; k <= nu; ++k) {
    q[static_cast<size_t>(nu - k)] =
        (k % 2 == 0) ? Rational(matching.coeffs[k]) : -Rational(matching.coeffs[k]);
  }
  AtomicMeasure measure;
  for (const auto& [y, multiplicity] : exact_multiplicity_roots(q)) {
    if (!(y > 0.0)) throw RootSolveError("matching measure: nonpositive square root");
    const double x = std::sqrt(y);
    const Rational w(multiplicity, v);
    measure.atoms.push_back({-x, w});
    measure.atoms.push_back({x, w});
  }
  if (v > 2 * nu) measure.atoms.push_back({0.0, Rational(v - 2 * nu, v)});
  std::sort(measure.atoms.begin(), measure.atoms.end(),
            [](const auto& a, const auto& b) { return a.location < b.location; });
  measure.total_mass = 0;
  for (const auto& atom : measure.atoms) measure.total_mass += atom.weight;
  if (measure.total_mass != 1) throw RootSolveError("matching measure mass is not 1");
  return measure;
}

AtomicMeasure matching_measure(const Graph& g, int vertex_cap) {
  return matching_measure(matching_coefficients(g, vertex_cap));
}

AtomicMeasure independence_measure(const CoefficientVector& independence) {
  if (independence.kind != CoefficientKind::independence) {
    throw std::invalid_argument("independence_measure needs independence coefficients");
  }
  const int v = independence.num_vertices;
  if (v == 0) throw std::invalid_argument("independence measure undefined for the empty graph");
  const int alpha = independence.top_index();
  AtomicMeasure measure;
  measure.total_mass = 0;
  if (alpha > 0) {
    const RatPoly poly = poly_monic(to_rational(independence.coeffs));
    for (const auto& [x, multiplicity] : exact_multiplicity_roots(poly)) {
      measure.atoms.push_back({x, Rational(multiplicity, v)});
    }
    std::sort(measure.atoms.begin(), measure.atoms.end(),
              [](const auto& a, const auto& b) { return a.location < b.location; });
    for (const auto& atom : measure.atoms) measure.total_mass += atom.weight;
  }
  if (measure.total_mass != Rational(alpha, v)) {
    throw RootSolveError("independence measure mass is not alpha/v");
  }
  return measure;
}

AtomicMeasure independence_measure(const Graph& g, int vertex_cap) {
  return independence_measure(independence_coefficients(g, vertex_cap));
}

bool heilmann_lieb_check(const Graph& g) {
  AtomicMeasure measure;
  try {
    measure = matching_measure(g);
  } catch (const RootSolveError&) {
    return false;
  }
  const int d = std::max(2, g.max_degree());
  const double bound = 2.0 * std::sqrt(static_cast<double>(d - 1)) + 1e-9;
  return std::all_of(measure.atoms.begin(), measure.atoms.end(),
                     [bound](const auto& atom) { return std::abs(atom.location) <= bound; });
}

namespace {

std::vector<std::complex<double>> independence_roots_complex(const Graph& g) {
  const auto c = independence_coefficients(g);
  if (c.top_index() <= 0) return {};
  return companion_eigenvalues(poly_monic(to_rational(c.coeffs)));
}

double dobrushin_beta(const Graph& g) { return std::exp(-1.0) / (g.max_degree() + 1); }

}  // namespace

bool dobrushin_bound_check(const Graph& g) {
  const double beta = dobrushin_beta(g);
  for (const auto& root : independence_roots_complex(g)) {
    if (std::abs(root) <= beta) return false;
  }
  return true;
}

bool tail_bound_check(const Graph& g, double R) {
  if (!(R > 1.0)) throw std::invalid_argument("tail_bound_check needs R > 1");
  if (g.num_vertices() == 0) return true;
  const double bound = std::log(1.0 / dobrushin_beta(g)) / std::log(R);
  double tail = 0.0;
  try {
    for (const auto& atom : independence_measure(g).atoms) {
      if (std::abs(atom.location) >= R) tail += to_double(atom.weight);
    }
  } catch (const RootSolveError&) {
    // Modulus-only mode for non-claw-free inputs with complex roots.
    int count = 0;
    for (const auto& root : independence_roots_complex(g)) {
      if (std::abs(root) >= R) ++count;
    }
    tail = static_cast<double>(count) / g.num_vertices();
  }
  return tail <= bound;
}

MeasureStats stats_from_measure(const AtomicMeasure& m, CoefficientKind kind) {
  MeasureStats stats;
  if (kind == CoefficientKind::matching) {
    for (const auto& [x, w] : m.atoms) {
      const double weight = to_double(w);
      stats.entropy_per_vertex += 0.5 * weight * std::log1p(x * x);
      stats.expected_size_normalized += 0.5 * weight * x * x / (1.0 + x * x);
      stats.variance_normalized += 0.5 * weight * x * x / ((1.0 + x * x) * (1.0 + x * x));
    }
    stats.ratio = to_double((Rational(1) - m.weight_at_zero()) / 2);
  } else {
    for (const auto& [x, w] : m.atoms) {
      if (x == 1.0) throw std::invalid_argument("independence measure atom at 1");
      if (x == 0.0) throw std::invalid_argument("independence measure atom at 0");
      const double weight = to_double(w);
      // I(G,x) is not monic; the -ln|x| term supplies ln(i_alpha)/v because
      // the roots multiply to 1/i_alpha.
      stats.entropy_per_vertex += weight * std::log(std::abs((1.0 - x) / x));
      stats.expected_size_normalized += weight / (1.0 - x);
      stats.variance_normalized += weight * (-x) / ((1.0 - x) * (1.0 - x));
    }
    stats.ratio = to_double(m.total_mass);
  }
  return stats;
}

double pm_entropy_from_measure(const AtomicMeasure& m) {
  double sum = 0.0;
  for (const auto& [x, w] : m.atoms) {
    if (x == 0.0) return -std::numeric_limits<double>::infinity();
    sum += to_double(w) * std::log(std::abs(x));
  }
  return sum;
}

MomentSequence moments_from_coefficients(const CoefficientVector& matching, int K) {
  if (matching.kind != CoefficientKind::matching) {
    throw std::invalid_argument("moments_from_coefficients needs matching coefficients");
  }
  if (K < 0 || K > kMomentCap) throw ResourceCapError("moment order cap is 64");
  const int v = matching.num_vertices;
  if (v == 0) throw std::invalid_argument("moments undefined for the empty graph");
  const int nu = matching.top_index();
  // e_j of all v roots: zero for odd j, (-1)^(j/2) m_(j/2) for even j <= 2 nu.
  std::vector<Integer> elem(static_cast<size_t>(v) + 1, Integer(0));
  elem[0] = 1;
  for (int k = 1; 2 * k <= v && k <= nu; ++k) {
    elem[static_cast<size_t>(2 * k)] = (k % 2 == 0) ? matching.coeffs[k] : -matching.coeffs[k];
  }
  std::vector<Integer> power(static_cast<size_t>(K) + 1, Integer(0));
  power[0] = v;
  for (int k = 1; k <= K; ++k) {
    Integer sum(0);
    const int upper = std::min(k - 1, v);
    for (int i = 1; i <= upper; ++i) {
      const Integer term = elem[static_cast<size_t>(i)] * power[static_cast<size_t>(k - i)];
      sum += (i % 2 == 1) ? term : -term;
    }
    if (k <= v) {
      const Integer term = Integer(k) * elem[static_cast<size_t>(k)];
      sum += (k % 2 == 1) ? term : -term;
    }
    power[static_cast<size_t>(k)] = sum;
  }
  MomentSequence out;
  out.per_vertex = true;
  out.values.reserve(static_cast<size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) out.values.emplace_back(power[static_cast<size_t>(k)], v);
  return out;
}

namespace {

// Closed-walk generating series on the path tree below the current
// self-avoiding path, truncated at `budget`: F = 1 / (1 - x^2 sum_children F).
std::vector<Integer> path_tree_series(const Graph& g, std::vector<char>& in_path, int tip,
                                      int budget) {
  std::vector<Integer> series(static_cast<size_t>(budget) + 1, Integer(0));
  series[0] = 1;
  if (budget < 2) return series;
  std::vector<Integer> branch(static_cast<size_t>(budget) + 1, Integer(0));
  for (int u : g.neighbors(tip)) {
    if (in_path[u]) continue;
    in_path[u] = 1;
    const auto child = path_tree_series(g, in_path, u, budget - 2);
    in_path[u] = 0;
    for (size_t j = 0; j + 2 <= static_cast<size_t>(budget); ++j) branch[j + 2] += child[j];
  }
  for (int j = 2; j <= budget; ++j) {
    Integer acc(0);
    for (int i = 2; i <= j; ++i) acc += branch[static_cast<size_t>(i)] * series[static_cast<size_t>(j - i)];
    series[static_cast<size_t>(j)] = acc;
  }
  return series;
}

}  // namespace

MomentSequence tree_like_walk_moments(const Graph& g, int K) {
  if (K < 0 || K > kWalkMomentCap) throw ResourceCapError("tree-like walk moment cap is 16");
  const int v = g.num_vertices();
  if (v == 0) throw std::invalid_argument("moments undefined for the empty graph");
  std::vector<Integer> totals(static_cast<size_t>(K) + 1, Integer(0));
  std::vector<char> in_path(static_cast<size_t>(v), 0);
  for (int root = 0; root < v; ++root) {
    in_path[root] = 1;
    const auto series = path_tree_series(g, in_path, root, K);
    in_path[root] = 0;
    for (int k = 0; k <= K; ++k) totals[static_cast<size_t>(k)] += series[static_cast<size_t>(k)];
  }
  MomentSequence out;
  out.per_vertex = true;
  out.values.reserve(static_cast<size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) out.values.emplace_back(totals[static_cast<size_t>(k)], v);
  return out;
}

AtomicMeasure quadrature_from_moments(const MomentSequence& moments, int nodes) {
  const int K = static_cast<int>(moments.values.size()) - 1;
  if (nodes < 1) throw std::invalid_argument("quadrature needs at least one node");
  if (2 * nodes > K) {
    throw std::invalid_argument("quadrature_from_moments: nodes may be at most K/2");
  }
  const auto& mu = moments.values;
  if (!(mu[0] > 0)) throw std::invalid_argument("quadrature needs positive total mass");

  // Exact Chebyshev recurrence for the Jacobi coefficients; Hankel
  // degeneracy is detected exactly rather than by floating-point tests.
  std::vector<Rational> alpha, beta;
  alpha.emplace_back(mu[1] / mu[0]);
  beta.emplace_back(mu[0]);
  std::vector<Rational> prev2;                              // sigma_{k-2}
  std::vector<Rational> prev(mu.begin(), mu.end());         // sigma_{k-1}, dense from l=0
  int prev_offset = 0;
  int count = nodes;
  for (int k = 1; k < nodes; ++k) {
    const int lo = k, hi = 2 * nodes - k - 1;
    std::vector<Rational> row(static_cast<size_t>(hi - lo) + 1);
    for (int l = lo; l <= hi; ++l) {
      Rational value = prev[static_cast<size_t>(l + 1 - prev_offset)] -
                       alpha[static_cast<size_t>(k - 1)] * prev[static_cast<size_t>(l - prev_offset)];
      if (k >= 2) {
        value -= beta[static_cast<size_t>(k - 1)] * prev2[static_cast<size_t>(l - (k - 2))];
      }
      row[static_cast<size_t>(l - lo)] = value;
    }
    const Rational new_beta = row[0] / prev[static_cast<size_t>(lo - 1 - prev_offset)];
    if (new_beta == 0) {
      count = k;  // the measure has exactly k support points
      break;
    }
    if (new_beta < 0) throw std::invalid_argument("moment sequence is not positive definite");
    beta.push_back(new_beta);
    alpha.push_back(row[1] / row[0] -
                    prev[static_cast<size_t>(lo - prev_offset)] /
                        prev[static_cast<size_t>(lo - 1 - prev_offset)]);
    prev2 = std::move(prev);
    prev = std::move(row);
    prev_offset = lo;
  }

  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(count, count);
  for (int i = 0; i < count; ++i) jacobi(i, i) = to_double(alpha[static_cast<size_t>(i)]);
  for (int i = 1; i < count; ++i) {
    const double off = std::sqrt(to_double(beta[static_cast<size_t>(i)]));
    jacobi(i, i - 1) = jacobi(i - 1, i) = off;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  if (solver.info() != Eigen::Success) throw RootSolveError("Jacobi eigensolve failed");

  AtomicMeasure rule;
  rule.total_mass = 0;
  const double mass = to_double(mu[0]);
  for (int i = 0; i < count; ++i) {
    const double weight = mass * solver.eigenvectors()(0, i) * solver.eigenvectors()(0, i);
    rule.atoms.push_back({solver.eigenvalues()(i), rational_from_double(weight)});
  }
  std::sort(rule.atoms.begin(), rule.atoms.end(),
            [](const auto& a, const auto& b) { return a.location < b.location; });
  for (const auto& atom : rule.atoms) rule.total_mass += atom.weight;
  return rule;
}

}  // namespace matchkit
