#include "matchkit/enumerate.hpp"

#include "matchkit/canonical.hpp"

#include <set>
#include <stdexcept>

namespace matchkit {

std::vector<Graph> all_graphs(int n) {
  if (n < 1) throw std::invalid_argument("all_graphs: n must be >= 1");
  if (n > 8) throw std::invalid_argument("all_graphs: practical limit is n <= 8");
  std::vector<Graph> current{Graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& base : current) {
      for (unsigned subset = 0; subset < (1u << (size - 1)); ++subset) {
        Graph extended(size);
        for (const auto& [u, v] : base.edges()) extended.add_edge(u, v);
        for (int w = 0; w < size - 1; ++w) {
          if (subset >> w & 1) extended.add_edge(w, size - 1);
        }
        if (seen.insert(canonical_form(extended)).second) next.push_back(std::move(extended));
      }
    }
    current = std::move(next);
  }
  return current;
}

std::vector<Graph> all_graphs_up_to(int max_vertices) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_vertices; ++n) {
    auto level = all_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Graph> all_balanced_bipartite(int side) {
  if (side < 1 || side > 4) {
    throw std::invalid_argument("all_balanced_bipartite: practical limit is side <= 4");
  }
  std::set<std::string> seen;
  std::vector<Graph> out;
  const int cells = side * side;
  for (unsigned matrix = 0; matrix < (1u << cells); ++matrix) {
    Graph g(2 * side);
    for (int i = 0; i < side; ++i) {
      for (int j = 0; j < side; ++j) {
        if (matrix >> (i * side + j) & 1) g.add_edge(i, side + j);
      }
    }
    if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace matchkit
