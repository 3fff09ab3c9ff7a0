#pragma once

#include "matchkit/graph.hpp"

#include <vector>

namespace matchkit {

// All graphs on exactly n vertices up to isomorphism (including
// disconnected ones), by extending the (n-1)-vertex list with every
// neighborhood of a new vertex and deduplicating canonically.
// Counts for n = 1..7: 1, 2, 4, 11, 34, 156, 1044.
std::vector<Graph> all_graphs(int n);

// Concatenation of all_graphs(1..max_vertices).
std::vector<Graph> all_graphs_up_to(int max_vertices);

// All balanced bipartite graphs with `side` vertices per class, up to
// isomorphism, from exhaustive biadjacency enumeration. Practical for
// side <= 4.
std::vector<Graph> all_balanced_bipartite(int side);

}  // namespace matchkit
