#include "matchkit/canonical.hpp"

#include "matchkit/arith.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace matchkit {

namespace {

// One pass of color refinement: split classes by the multiset of neighbor
// colors until the partition is stable. Color values are ordered, and the
// ordering is isomorphism-invariant (keys are sorted lexicographically).
void refine(const Graph& g, std::vector<int>& colors) {
  const int n = g.num_vertices();
  int num_colors = 1 + (n ? *std::max_element(colors.begin(), colors.end()) : -1);
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> keyed(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> key;
      key.reserve(g.neighbors(v).size() + 1);
      key.push_back(colors[v]);
      for (int w : g.neighbors(v)) key.push_back(colors[w]);
      std::sort(key.begin() + 1, key.end());
      keyed[v] = {std::move(key), v};
    }
    std::map<std::vector<int>, int> order;
    for (const auto& [key, v] : keyed) order.emplace(key, 0);
    int next = 0;
    for (auto& [key, idx] : order) idx = next++;
    for (auto& [key, v] : keyed) colors[v] = order[key];
    if (next == num_colors) break;
    num_colors = next;
  }
}

std::string encode(const Graph& g, const std::vector<int>& colors) {
  const int n = g.num_vertices();
  std::vector<int> perm(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) perm[colors[v]] = v;
  std::string bits;
  bits.reserve(static_cast<size_t>(n) * (n - 1) / 16 + 8);
  unsigned byte = 0;
  int filled = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      byte = (byte << 1) | (g.has_edge(perm[i], perm[j]) ? 1u : 0u);
      if (++filled == 8) {
        bits.push_back(static_cast<char>(byte));
        byte = 0;
        filled = 0;
      }
    }
  }
  if (filled) bits.push_back(static_cast<char>(byte << (8 - filled)));
  return bits;
}

void search(const Graph& g, std::vector<int> colors, std::string& best) {
  refine(g, colors);
  const int n = g.num_vertices();
  std::vector<int> class_size(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) ++class_size[colors[v]];
  int target = -1;
  for (int c = 0; c < n; ++c) {
    if (class_size[c] > 1) {
      target = c;
      break;
    }
  }
  if (target == -1) {
    std::string candidate = encode(g, colors);
    if (best.empty() || candidate < best) best = std::move(candidate);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    std::vector<int> branched(colors);
    for (int u = 0; u < n; ++u) {
      branched[u] = 2 * colors[u] + ((colors[u] == target && u != v) ? 1 : 0);
    }
    search(g, std::move(branched), best);
  }
}

}  // namespace

std::string canonical_form(const Graph& g, std::optional<int> root, int vertex_cap) {
  const int n = g.num_vertices();
  if (n > vertex_cap) {
    throw ResourceCapError("canonical form: " + std::to_string(n) + " vertices exceeds cap " +
                           std::to_string(vertex_cap));
  }
  std::vector<int> colors(static_cast<size_t>(n), root ? 1 : 0);
  if (root) {
    if (*root < 0 || *root >= n) throw std::invalid_argument("canonical form: root out of range");
    colors[*root] = 0;
  }
  std::string best;
  search(g, std::move(colors), best);
  std::string header(root ? "R" : "U");
  header += std::to_string(n);
  header += ';';
  return header + best;
}

BallSignature canonical_signature(const RootedBall& ball, int vertex_cap) {
  return canonical_form(ball.graph, ball.root, vertex_cap);
}

bool rooted_isomorphic(const RootedBall& a, const RootedBall& b) {
  if (a.graph.num_vertices() != b.graph.num_vertices()) return false;
  return canonical_signature(a) == canonical_signature(b);
}

}  // namespace matchkit
