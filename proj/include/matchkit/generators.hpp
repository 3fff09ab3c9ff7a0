#pragma once

#include "matchkit/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace matchkit {

// Deterministic RNG wrapper. mt19937_64 output is pinned by the standard;
// the sampling helpers avoid std::uniform_int_distribution and std::shuffle,
// whose algorithms are implementation-defined, so identical seeds give
// bit-identical graphs on every platform.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform value in [0, bound) by bitmask rejection.
  std::uint64_t below(std::uint64_t bound);

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[static_cast<std::size_t>(below(i))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Pairing-model d-regular graph with whole-graph rejection of loops and
// parallel edges. Throws ResourceCapError when the rejection budget runs out.
Graph random_regular(int n, int d, std::uint64_t seed);

// Union of d random permutations between the sides, rejected until simple.
Graph random_bipartite_regular(int n_per_side, int d, std::uint64_t seed);

// d-regular graph with girth >= g_min: seeded rejection over random_regular
// plus random 2-edge switches that target a shortest cycle.
Graph large_girth_regular(int n, int d, int g_min, std::uint64_t seed);

// Bipartite graph on n+n vertices where each cross pair appears
// independently with probability num/den. Used by the expander test suites.
Graph random_bipartite(int n_per_side, int prob_num, int prob_den, std::uint64_t seed);

}  // namespace matchkit
