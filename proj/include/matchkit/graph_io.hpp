#pragma once

#include "matchkit/graph.hpp"

#include <iosfwd>
#include <string>

namespace matchkit {

// Text interchange format shared by every CLI subcommand:
//   # comment
//   p <num_vertices>
//   e <u> <v>          with 0 <= u < v < num_vertices
// Duplicate edges and malformed lines are rejected.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);
std::string graph_to_string(const Graph& g);
Graph graph_from_string(const std::string& text);

}  // namespace matchkit
