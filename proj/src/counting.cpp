#include "matchkit/counting.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace matchkit {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> masks(static_cast<size_t>(g.num_vertices()), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (int w : g.neighbors(v)) masks[v] |= bit(w);
  }
  return masks;
}

// Connected component of the lowest set vertex, restricted to `mask`.
Mask first_component(const std::vector<Mask>& nbrs, Mask mask) {
  Mask comp = bit(std::countr_zero(mask));
  Mask frontier = comp;
  while (frontier) {
    Mask next = 0;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= nbrs[v] & mask & ~comp;
    }
    comp |= next;
    frontier = next;
  }
  return comp;
}

int pivot_max_degree(const std::vector<Mask>& nbrs, Mask mask) {
  int best = -1, best_deg = -1;
  Mask scan = mask;
  while (scan) {
    const int v = std::countr_zero(scan);
    scan &= scan - 1;
    const int deg = std::popcount(nbrs[v] & mask);
    if (deg > best_deg) {  // ties keep the lowest index
      best_deg = deg;
      best = v;
    }
  }
  return best;
}

IntPoly shift_up(const IntPoly& p) {
  IntPoly out(p.size() + 1, Integer(0));
  for (size_t i = 0; i < p.size(); ++i) out[i + 1] = p[i];
  return out;
}

class MatchingCounter {
 public:
  explicit MatchingCounter(const Graph& g) : nbrs_(neighbor_masks(g)) {}

  IntPoly solve(Mask mask) {
    if (mask == 0) return {Integer(1)};
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    IntPoly result;
    const Mask comp = first_component(nbrs_, mask);
    if (comp != mask) {
      result = poly_mul(solve(comp), solve(mask & ~comp));
    } else {
      const int v = pivot_max_degree(nbrs_, mask);
      result = solve(mask & ~bit(v));
      Mask scan = nbrs_[v] & mask;
      while (scan) {
        const int u = std::countr_zero(scan);
        scan &= scan - 1;
        result = poly_add(result, shift_up(solve(mask & ~bit(v) & ~bit(u))));
      }
    }
    memo_.emplace(mask, result);
    return result;
  }

 private:
  std::vector<Mask> nbrs_;
  std::unordered_map<Mask, IntPoly> memo_;
};

class IndependenceCounter {
 public:
  explicit IndependenceCounter(const Graph& g) : nbrs_(neighbor_masks(g)) {}

  IntPoly solve(Mask mask) {
    if (mask == 0) return {Integer(1)};
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    IntPoly result;
    const Mask comp = first_component(nbrs_, mask);
    if (comp != mask) {
      result = poly_mul(solve(comp), solve(mask & ~comp));
    } else {
      const int v = pivot_max_degree(nbrs_, mask);
      result = poly_add(solve(mask & ~bit(v)), shift_up(solve(mask & ~(nbrs_[v] & mask) & ~bit(v))));
    }
    memo_.emplace(mask, result);
    return result;
  }

 private:
  std::vector<Mask> nbrs_;
  std::unordered_map<Mask, IntPoly> memo_;
};

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

void check_counting_cap(const Graph& g, int cap, const char* what) {
  if (g.num_vertices() > cap) {
    throw ResourceCapError(std::string(what) + ": " + std::to_string(g.num_vertices()) +
                           " vertices exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

CoefficientVector matching_coefficients(const Graph& g, int vertex_cap) {
  check_counting_cap(g, std::min(vertex_cap, 64), "matching_coefficients");
  MatchingCounter counter(g);
  CoefficientVector out;
  out.kind = CoefficientKind::matching;
  out.coeffs = counter.solve(full_mask(g.num_vertices()));
  out.num_vertices = g.num_vertices();
  return out;
}

CoefficientVector independence_coefficients(const Graph& g, int vertex_cap) {
  check_counting_cap(g, std::min(vertex_cap, 64), "independence_coefficients");
  IndependenceCounter counter(g);
  CoefficientVector out;
  out.kind = CoefficientKind::independence;
  out.coeffs = counter.solve(full_mask(g.num_vertices()));
  out.num_vertices = g.num_vertices();
  return out;
}

bool verify_transfer_identity(const Graph& g, int vertex_cap) {
  const auto m = matching_coefficients(g, vertex_cap);
  const auto i = independence_coefficients(line_graph(g), std::max(vertex_cap, g.num_edges()));
  return m.coeffs == i.coeffs;
}

MatchingStats stats_from_coefficients(const CoefficientVector& c) {
  if (c.kind != CoefficientKind::matching) {
    throw std::invalid_argument("stats_from_coefficients needs matching coefficients");
  }
  const int v = c.num_vertices;
  if (v == 0) throw std::invalid_argument("stats undefined for the empty graph");
  MatchingStats stats;
  Integer total(0), weighted(0), weighted_sq(0);
  for (size_t k = 0; k < c.coeffs.size(); ++k) {
    total += c.coeffs[k];
    weighted += Integer(k) * c.coeffs[k];
    weighted_sq += Integer(k) * Integer(k) * c.coeffs[k];
  }
  stats.total_matchings = total;
  stats.entropy_per_vertex = log_integer(total) / v;
  const Rational mean(weighted, total);
  const Rational second(weighted_sq, total);
  stats.expected_size_normalized = to_double(mean / v);
  stats.variance_normalized = to_double((second - mean * mean) / v);
  const int nu = c.top_index();
  stats.matching_ratio = Rational(nu, v);
  if (v % 2 == 0 && nu == v / 2) {
    stats.pm_count = c.coeffs.back();
  } else {
    stats.pm_count = 0;
  }
  stats.pm_entropy_per_vertex = stats.pm_count > 0
                                    ? log_integer(stats.pm_count) / v
                                    : -std::numeric_limits<double>::infinity();
  return stats;
}

MatchingStats matching_stats(const Graph& g, int vertex_cap) {
  return stats_from_coefficients(matching_coefficients(g, vertex_cap));
}

namespace {

std::atomic<int> g_max_threads{1};

Integer int128_to_integer(__int128 value) {
  const bool negative = value < 0;
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
                                   : static_cast<unsigned __int128>(value);
  Integer out = Integer(static_cast<std::uint64_t>(mag >> 64));
  out <<= 64;
  out += Integer(static_cast<std::uint64_t>(mag));
  return negative ? -out : out;
}

// One contiguous range of Ryser subsets; row sums are rebuilt from the Gray
// code of the range start, so ranges are independent.
Integer ryser_range(const std::vector<std::uint32_t>& rows, int n, std::uint64_t begin,
                    std::uint64_t end) {
  std::vector<int> row_sums(rows.size(), 0);
  std::uint32_t subset = static_cast<std::uint32_t>(begin ^ (begin >> 1));
  for (size_t i = 0; i < rows.size(); ++i) row_sums[i] = std::popcount(rows[i] & subset);
  Integer acc(0);
  __int128 partial = 0;
  int pending = 0;
  for (std::uint64_t k = begin; k < end; ++k) {
    if (k != begin) {
      const int flip = std::countr_zero(k);
      const std::uint32_t flip_bit = std::uint32_t{1} << flip;
      subset ^= flip_bit;
      const int delta = (subset & flip_bit) ? 1 : -1;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] & flip_bit) row_sums[i] += delta;
      }
    }
    __int128 product = 1;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (row_sums[i] == 0) {
        product = 0;
        break;
      }
      product *= row_sums[i];
    }
    partial += (std::popcount(subset) & 1) ? -product : product;
    if (++pending == 16) {
      acc += int128_to_integer(partial);
      partial = 0;
      pending = 0;
    }
  }
  acc += int128_to_integer(partial);
  return (n & 1) ? -acc : acc;
}

}  // namespace

void set_max_threads(int threads) {
  if (threads < 1) throw std::invalid_argument("thread count must be >= 1");
  g_max_threads.store(threads);
}

int max_threads() { return g_max_threads.load(); }

Integer permanent_pm_count(const Graph& g, int side_cap) {
  const auto sides = bipartition(g);
  if (!sides) throw std::invalid_argument("permanent_pm_count: graph is not bipartite");
  const auto& [left, right] = *sides;
  if (left.size() != right.size()) {
    throw std::invalid_argument("permanent_pm_count: sides are unequal");
  }
  const int n = static_cast<int>(left.size());
  if (n > side_cap) {
    throw ResourceCapError("permanent_pm_count: side " + std::to_string(n) + " exceeds cap " +
                           std::to_string(side_cap));
  }
  if (n == 0) return Integer(1);
  std::vector<std::uint32_t> rows(static_cast<size_t>(n), 0);
  std::vector<int> col_index(static_cast<size_t>(g.num_vertices()), -1);
  for (int j = 0; j < n; ++j) col_index[right[j]] = j;
  for (int i = 0; i < n; ++i) {
    for (int w : g.neighbors(left[i])) rows[i] |= std::uint32_t{1} << col_index[w];
  }
  const std::uint64_t subsets = (std::uint64_t{1} << n);
  const int threads = std::min<std::uint64_t>(max_threads(), 8);
  if (threads == 1 || subsets < 4096) {
    return ryser_range(rows, n, 1, subsets);
  }
  // Fixed-order reduction over exact integers: the split is arbitrary.
  std::vector<Integer> parts(static_cast<size_t>(threads));
  std::vector<std::thread> workers;
  const std::uint64_t span = (subsets - 1) / threads + 1;
  for (int t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::max<std::uint64_t>(1, t * span);
    const std::uint64_t end = std::min(subsets, (t + 1) * span);
    workers.emplace_back([&rows, n, begin, end, t, &parts] {
      if (begin < end) parts[static_cast<size_t>(t)] = ryser_range(rows, n, begin, end);
    });
  }
  for (auto& w : workers) w.join();
  Integer total(0);
  for (const auto& part : parts) total += part;
  return total;
}

Integer pm_count(const Graph& g) {
  if (g.num_vertices() % 2 != 0) return Integer(0);
  const auto sides = bipartition(g);
  if (sides && sides->first.size() == sides->second.size() &&
      static_cast<int>(sides->first.size()) <= kPermanentSideCap) {
    return permanent_pm_count(g);
  }
  const auto c = matching_coefficients(g);
  if (c.top_index() != g.num_vertices() / 2) return Integer(0);
  return c.coeffs.back();
}

Rational edge_probability(const Graph& g, Edge e) {
  if (!g.has_edge(e.first, e.second)) throw std::invalid_argument("edge_probability: not an edge");
  const Integer total = pm_count(g);
  if (total == 0) throw std::invalid_argument("edge_probability: graph has no perfect matching");
  const Integer with_e = pm_count(g.without_vertices({e.first, e.second}));
  return Rational(with_e, total);
}

Rational all_matchings_edge_probability(const Graph& g, Edge e) {
  if (!g.has_edge(e.first, e.second)) {
    throw std::invalid_argument("all_matchings_edge_probability: not an edge");
  }
  const auto whole = matching_coefficients(g);
  const auto reduced = matching_coefficients(g.without_vertices({e.first, e.second}));
  Integer total(0), containing(0);
  for (const auto& c : whole.coeffs) total += c;
  for (const auto& c : reduced.coeffs) containing += c;
  return Rational(containing, total);
}

bool claw_free(const Graph& g) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto nbrs = g.neighbors(v);
    const int d = static_cast<int>(nbrs.size());
    for (int a = 0; a < d; ++a) {
      for (int b = a + 1; b < d; ++b) {
        if (g.has_edge(nbrs[a], nbrs[b])) continue;
        for (int c = b + 1; c < d; ++c) {
          if (!g.has_edge(nbrs[a], nbrs[c]) && !g.has_edge(nbrs[b], nbrs[c])) return false;
        }
      }
    }
  }
  return true;
}

IntPoly matching_polynomial(const CoefficientVector& matching) {
  if (matching.kind != CoefficientKind::matching) {
    throw std::invalid_argument("matching_polynomial needs matching coefficients");
  }
  const int v = matching.num_vertices;
  IntPoly out(static_cast<size_t>(v) + 1, Integer(0));
  for (int k = 0; k <= matching.top_index(); ++k) {
    out[static_cast<size_t>(v - 2 * k)] = (k % 2 == 0) ? matching.coeffs[k] : -matching.coeffs[k];
  }
  poly_trim(out);
  return out;
}

IntPoly adjacency_charpoly(const Graph& g) {
  const int n = g.num_vertices();
  using Matrix = std::vector<std::vector<Integer>>;
  auto mul = [n](const Matrix& a, const Matrix& b) {
    Matrix out(static_cast<size_t>(n), std::vector<Integer>(static_cast<size_t>(n), Integer(0)));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (a[i][k] == 0) continue;
        for (int j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
      }
    }
    return out;
  };
  Matrix adjacency(static_cast<size_t>(n), std::vector<Integer>(static_cast<size_t>(n), Integer(0)));
  for (const auto& [u, v] : g.edges()) adjacency[u][v] = adjacency[v][u] = 1;
  Matrix work(static_cast<size_t>(n), std::vector<Integer>(static_cast<size_t>(n), Integer(0)));
  for (int i = 0; i < n; ++i) work[i][i] = 1;
  IntPoly out(static_cast<size_t>(n) + 1, Integer(0));
  out[static_cast<size_t>(n)] = 1;
  // Faddeev-LeVerrier; every division by k is exact for integer matrices.
  for (int k = 1; k <= n; ++k) {
    work = mul(adjacency, work);
    Integer trace(0);
    for (int i = 0; i < n; ++i) trace += work[i][i];
    Integer ck = -trace / k;
    if (ck * k != -trace) throw std::logic_error("charpoly: non-exact division");
    out[static_cast<size_t>(n - k)] = ck;
    for (int i = 0; i < n; ++i) work[i][i] += ck;
  }
  return out;
}

namespace {

void collect_cycle_masks(const Graph& g, int start, std::vector<int>& path,
                         std::vector<bool>& in_path, Mask mask, std::vector<Mask>& out) {
  const int current = path.back();
  if (path.size() >= 3 && g.has_edge(current, start) && path[1] < current) out.push_back(mask);
  if (static_cast<int>(path.size()) == g.num_vertices()) return;
  for (int w : g.neighbors(current)) {
    if (w <= start || in_path[w]) continue;
    in_path[w] = true;
    path.push_back(w);
    collect_cycle_masks(g, start, path, in_path, mask | bit(w), out);
    path.pop_back();
    in_path[w] = false;
  }
}

void accumulate_cycle_sum(const Graph& g, const std::vector<Mask>& cycles, size_t from, Mask used,
                          int count, IntPoly& acc) {
  std::vector<int> removed;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (used & bit(v)) removed.push_back(v);
  }
  IntPoly term = matching_polynomial(matching_coefficients(g.without_vertices(removed)));
  Integer scale = (count % 2 == 0) ? integer_pow(2, static_cast<unsigned>(count))
                                   : -integer_pow(2, static_cast<unsigned>(count));
  for (auto& c : term) c *= scale;
  acc = poly_add(acc, term);
  for (size_t j = from; j < cycles.size(); ++j) {
    if ((cycles[j] & used) == 0) {
      accumulate_cycle_sum(g, cycles, j + 1, used | cycles[j], count + 1, acc);
    }
  }
}

}  // namespace

bool verify_cycle_sum_identity(const Graph& g, int vertex_cap) {
  check_counting_cap(g, vertex_cap, "verify_cycle_sum_identity");
  std::vector<Mask> cycles;
  std::vector<bool> in_path(static_cast<size_t>(g.num_vertices()), false);
  for (int s = 0; s < g.num_vertices(); ++s) {
    std::vector<int> path{s};
    in_path[s] = true;
    collect_cycle_masks(g, s, path, in_path, bit(s), cycles);
    in_path[s] = false;
  }
  IntPoly acc;
  accumulate_cycle_sum(g, cycles, 0, 0, 0, acc);
  return acc == adjacency_charpoly(g);
}

std::vector<std::vector<Edge>> enumerate_perfect_matchings(const Graph& g, size_t limit) {
  std::vector<std::vector<Edge>> out;
  if (g.num_vertices() % 2 != 0) return out;
  std::vector<bool> matched(static_cast<size_t>(g.num_vertices()), false);
  std::vector<Edge> current;
  auto rec = [&](auto&& self) -> void {
    if (out.size() >= limit) return;
    int v = -1;
    for (int u = 0; u < g.num_vertices(); ++u) {
      if (!matched[u]) {
        v = u;
        break;
      }
    }
    if (v == -1) {
      out.push_back(current);
      return;
    }
    for (int w : g.neighbors(v)) {
      if (matched[w]) continue;
      matched[v] = matched[w] = true;
      current.emplace_back(std::min(v, w), std::max(v, w));
      self(self);
      current.pop_back();
      matched[v] = matched[w] = false;
      if (out.size() >= limit) return;
    }
  };
  rec(rec);
  return out;
}

}  // namespace matchkit
