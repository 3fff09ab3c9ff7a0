#include "matchkit/graph.hpp"

#include "matchkit/arith.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace matchkit {

namespace {

void check_vertex(const char* what, int v, int n) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

Graph::Graph(int num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(static_cast<size_t>(num_vertices));
}

Graph Graph::from_edges(int num_vertices, const std::vector<Edge>& edges) {
  Graph g(num_vertices);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::span<const int> Graph::neighbors(int v) const {
  check_vertex("neighbors", v, num_vertices());
  return adj_[v];
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
  return d;
}

bool Graph::is_regular() const {
  if (num_vertices() == 0) return true;
  const size_t d = adj_[0].size();
  return std::all_of(adj_.begin(), adj_.end(),
                     [d](const auto& nbrs) { return nbrs.size() == d; });
}

bool Graph::has_edge(int u, int v) const {
  check_vertex("has_edge", u, num_vertices());
  check_vertex("has_edge", v, num_vertices());
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

void Graph::add_edge(int u, int v) {
  check_vertex("add_edge", u, num_vertices());
  check_vertex("add_edge", v, num_vertices());
  if (u == v) throw std::invalid_argument("self-loop rejected");
  if (has_edge(u, v)) throw std::invalid_argument("parallel edge rejected");
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++num_edges_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(num_edges_));
  for (int u = 0; u < num_vertices(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced_subgraph(const std::vector<int>& vertices) const {
  std::vector<int> index(static_cast<size_t>(num_vertices()), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    check_vertex("induced_subgraph", vertices[i], num_vertices());
    if (index[vertices[i]] != -1) throw std::invalid_argument("duplicate vertex in selection");
    index[vertices[i]] = static_cast<int>(i);
  }
  Graph g(static_cast<int>(vertices.size()));
  for (int u : vertices) {
    for (int v : adj_[u]) {
      if (u < v && index[v] != -1) g.add_edge(index[u], index[v]);
    }
  }
  return g;
}

Graph Graph::without_vertices(const std::vector<int>& removed) const {
  std::vector<bool> drop(static_cast<size_t>(num_vertices()), false);
  for (int v : removed) {
    check_vertex("without_vertices", v, num_vertices());
    drop[v] = true;
  }
  std::vector<int> keep;
  for (int v = 0; v < num_vertices(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(keep);
}

Graph Graph::without_edge(int u, int v) const {
  if (!has_edge(u, v)) throw std::invalid_argument("without_edge: edge not present");
  Graph g(num_vertices());
  for (int a = 0; a < num_vertices(); ++a) {
    for (int b : adj_[a]) {
      if (a < b && !(a == std::min(u, v) && b == std::max(u, v))) g.add_edge(a, b);
    }
  }
  return g;
}

std::vector<std::vector<int>> Graph::connected_components() const {
  std::vector<std::vector<int>> components;
  std::vector<bool> seen(static_cast<size_t>(num_vertices()), false);
  for (int s = 0; s < num_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = true;
    for (size_t head = 0; head < comp.size(); ++head) {
      for (int w : adj_[comp[head]]) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

Digraph::Digraph(int num_vertices) {
  if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
  out_.resize(static_cast<size_t>(num_vertices));
  in_.resize(static_cast<size_t>(num_vertices));
}

std::span<const int> Digraph::out_neighbors(int v) const {
  check_vertex("out_neighbors", v, num_vertices());
  return out_[v];
}

std::span<const int> Digraph::in_neighbors(int v) const {
  check_vertex("in_neighbors", v, num_vertices());
  return in_[v];
}

bool Digraph::has_arc(int u, int v) const {
  check_vertex("has_arc", u, num_vertices());
  check_vertex("has_arc", v, num_vertices());
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

void Digraph::add_arc(int u, int v) {
  check_vertex("add_arc", u, num_vertices());
  check_vertex("add_arc", v, num_vertices());
  if (u == v) throw std::invalid_argument("self-arc rejected");
  if (has_arc(u, v)) throw std::invalid_argument("duplicate arc rejected");
  out_[u].insert(std::upper_bound(out_[u].begin(), out_[u].end(), v), v);
  in_[v].insert(std::upper_bound(in_[v].begin(), in_[v].end(), u), u);
  ++num_arcs_;
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph make_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite sides must be >= 1");
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  }
  return g;
}

Graph make_lcf(int n, const std::vector<int>& pattern, int repeats) {
  if (pattern.empty() || repeats < 1 || n != static_cast<int>(pattern.size()) * repeats) {
    throw std::invalid_argument("LCF code does not cover the vertex count");
  }
  Graph g = make_cycle(n);
  for (int i = 0; i < n; ++i) {
    const int jump = pattern[static_cast<size_t>(i) % pattern.size()];
    const int j = ((i + jump) % n + n) % n;
    if (!g.has_edge(i, j)) g.add_edge(i, j);
  }
  return g;
}

Graph make_petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  Graph lg(static_cast<int>(edges.size()));
  for (size_t i = 0; i < edges.size(); ++i) {
    for (size_t j = i + 1; j < edges.size(); ++j) {
      const auto& [a, b] = edges[i];
      const auto& [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) lg.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return lg;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.num_vertices() + b.num_vertices());
  for (const auto& [u, v] : a.edges()) g.add_edge(u, v);
  const int offset = a.num_vertices();
  for (const auto& [u, v] : b.edges()) g.add_edge(offset + u, offset + v);
  return g;
}

Graph tensor_with_k2(const Graph& g) {
  const int n = g.num_vertices();
  Graph cover(2 * n);
  for (const auto& [u, v] : g.edges()) {
    cover.add_edge(u, n + v);
    cover.add_edge(v, n + u);
  }
  return cover;
}

std::optional<std::pair<int, std::vector<int>>> girth_with_cycle(const Graph& g) {
  const int n = g.num_vertices();
  int best = std::numeric_limits<int>::max();
  int best_root = -1, best_x = -1, best_y = -1;
  std::vector<int> dist(static_cast<size_t>(n));
  std::vector<int> parent(static_cast<size_t>(n));
  std::vector<int> best_parent;
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      if (2 * dist[x] >= best) break;
      for (int y : g.neighbors(x)) {
        if (dist[y] == -1) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x] && dist[y] >= dist[x]) {
          // Non-tree edge closing a cycle through this BFS tree.
          const int len = dist[x] + dist[y] + 1;
          if (len < best) {
            best = len;
            best_root = root;
            best_x = x;
            best_y = y;
            best_parent = parent;
          }
        }
      }
    }
  }
  if (best_root == -1) return std::nullopt;

  auto path_to_root = [&](int v) {
    std::vector<int> path;
    for (int w = v; w != -1; w = best_parent[w]) path.push_back(w);
    return path;  // v ... root
  };
  std::vector<int> px = path_to_root(best_x);
  std::vector<int> py = path_to_root(best_y);
  // Trim the common tail so the walk reduces to a simple cycle.
  while (px.size() >= 2 && py.size() >= 2 && px[px.size() - 2] == py[py.size() - 2]) {
    px.pop_back();
    py.pop_back();
  }
  std::vector<int> cycle(px.rbegin(), px.rend());  // meet ... x
  for (size_t i = 0; i + 1 < py.size(); ++i) cycle.push_back(py[i]);
  return std::make_pair(static_cast<int>(cycle.size()), cycle);
}

std::optional<int> girth(const Graph& g) {
  auto found = girth_with_cycle(g);
  if (!found) return std::nullopt;
  return found->first;
}

namespace {

// Counts k-cycles anchored at their smallest vertex `start`, walking only
// through larger vertices; orientation fixed by second < last vertex.
void count_cycles_from(const Graph& g, int start, int k, std::vector<int>& path,
                       std::vector<bool>& in_path, long long& count) {
  const int current = path.back();
  if (static_cast<int>(path.size()) == k) {
    if (g.has_edge(current, start) && path[1] < current) ++count;
    return;
  }
  for (int w : g.neighbors(current)) {
    if (w <= start || in_path[w]) continue;
    in_path[w] = true;
    path.push_back(w);
    count_cycles_from(g, start, k, path, in_path, count);
    path.pop_back();
    in_path[w] = false;
  }
}

}  // namespace

long long count_cycles(const Graph& g, int k) {
  if (k < 3) throw std::invalid_argument("cycles have length >= 3");
  if (k > 12) throw ResourceCapError("count_cycles supports k <= 12");
  long long count = 0;
  std::vector<bool> in_path(static_cast<size_t>(g.num_vertices()), false);
  for (int s = 0; s < g.num_vertices(); ++s) {
    std::vector<int> path{s};
    in_path[s] = true;
    count_cycles_from(g, s, k, path, in_path, count);
    in_path[s] = false;
  }
  return count;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> color(static_cast<size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : g.neighbors(x)) {
        if (color[y] == -1) {
          color[y] = 1 - color[x];
          queue.push_back(y);
        } else if (color[y] == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<int> left, right;
  for (int v = 0; v < n; ++v) (color[v] == 0 ? left : right).push_back(v);
  return std::make_pair(std::move(left), std::move(right));
}

std::vector<int> distances_from(const Graph& g, int source) {
  check_vertex("distances_from", source, g.num_vertices());
  std::vector<int> dist(static_cast<size_t>(g.num_vertices()), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : g.neighbors(x)) {
      if (dist[y] == -1) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

RootedBall extract_ball(const Graph& g, int root, int radius) {
  check_vertex("extract_ball", root, g.num_vertices());
  if (radius < 0) throw std::invalid_argument("negative radius");
  const auto dist = distances_from(g, root);
  std::vector<int> inside;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (dist[v] != -1 && dist[v] <= radius) inside.push_back(v);
  }
  RootedBall ball;
  ball.graph = g.induced_subgraph(inside);
  ball.root = static_cast<int>(std::lower_bound(inside.begin(), inside.end(), root) - inside.begin());
  ball.radius = radius;
  return ball;
}

}  // namespace matchkit
