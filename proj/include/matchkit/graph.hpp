#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace matchkit {

using Edge = std::pair<int, int>;  // normalized u < v

// Undirected simple graph on dense 0-indexed vertices. Neighbor lists stay
// sorted; self-loops and parallel edges are rejected at insertion.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);
  static Graph from_edges(int num_vertices, const std::vector<Edge>& edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_edges_; }
  std::span<const int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool is_regular() const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  // Canonical edge list, lexicographically sorted pairs with u < v.
  std::vector<Edge> edges() const;

  Graph induced_subgraph(const std::vector<int>& vertices) const;
  Graph without_vertices(const std::vector<int>& removed) const;
  Graph without_edge(int u, int v) const;

  std::vector<std::vector<int>> connected_components() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<int>> adj_;
  int num_edges_ = 0;
};

struct RootedBall {
  Graph graph;
  int root = 0;
  int radius = 0;
};

// Directed graph with mirrored in/out adjacency, used for the matched
// digraph of a bipartite graph.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int num_vertices);

  int num_vertices() const { return static_cast<int>(out_.size()); }
  int num_arcs() const { return num_arcs_; }
  std::span<const int> out_neighbors(int v) const;
  std::span<const int> in_neighbors(int v) const;
  bool has_arc(int u, int v) const;
  void add_arc(int u, int v);

 private:
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  int num_arcs_ = 0;
};

Graph make_cycle(int n);
Graph make_path(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
// Hamiltonian cycle on n vertices plus the chords of an LCF code.
Graph make_lcf(int n, const std::vector<int>& pattern, int repeats);
Graph make_petersen();

Graph line_graph(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
// Bipartite double cover G x K_2.
Graph tensor_with_k2(const Graph& g);

// Exact girth; empty for forests.
std::optional<int> girth(const Graph& g);
// Girth together with the vertex sequence of one shortest cycle.
std::optional<std::pair<int, std::vector<int>>> girth_with_cycle(const Graph& g);
// Number of distinct k-cycles (as subgraphs). Capped at k <= 12.
long long count_cycles(const Graph& g, int k);

// Proper 2-coloring if one exists; the first vertex of every component
// lands in the first class, which makes the result deterministic.
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g);

std::vector<int> distances_from(const Graph& g, int source);
RootedBall extract_ball(const Graph& g, int root, int radius);

}  // namespace matchkit
