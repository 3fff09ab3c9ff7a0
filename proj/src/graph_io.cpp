#include "matchkit/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace matchkit {

Graph read_graph(std::istream& in) {
  std::optional<Graph> g;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string tag;
    fields >> tag;
    auto fail = [&](const std::string& why) {
      throw std::invalid_argument("graph line " + std::to_string(line_no) + ": " + why);
    };
    if (tag == "p") {
      if (g) fail("repeated 'p' line");
      int n = -1;
      if (!(fields >> n) || n < 0) fail("expected 'p <num_vertices>'");
      std::string extra;
      if (fields >> extra) fail("trailing tokens");
      g.emplace(n);
    } else if (tag == "e") {
      if (!g) fail("'e' before 'p'");
      int u = -1, v = -1;
      if (!(fields >> u >> v)) fail("expected 'e <u> <v>'");
      std::string extra;
      if (fields >> extra) fail("trailing tokens");
      if (!(0 <= u && u < v && v < g->num_vertices())) fail("edge endpoints must satisfy 0 <= u < v < n");
      if (g->has_edge(u, v)) fail("duplicate edge");
      g->add_edge(u, v);
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  if (!g) throw std::invalid_argument("graph input has no 'p' line");
  return *g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p " << g.num_vertices() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  write_graph(out, g);
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

Graph graph_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

}  // namespace matchkit
