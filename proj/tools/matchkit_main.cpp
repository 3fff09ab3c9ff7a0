#include "matchkit/arith.hpp"
#include "matchkit/bs_stats.hpp"
#include "matchkit/canonical.hpp"
#include "matchkit/counting.hpp"
#include "matchkit/covers.hpp"
#include "matchkit/expander.hpp"
#include "matchkit/generators.hpp"
#include "matchkit/graph_io.hpp"
#include "matchkit/measures.hpp"
#include "matchkit/mckay.hpp"
#include "matchkit/selftest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using matchkit::Edge;
using matchkit::Graph;
using matchkit::Integer;
using matchkit::Rational;
using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

Edge parse_edge(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("edge must be 'u,v'");
  const int u = std::stoi(text.substr(0, comma));
  const int v = std::stoi(text.substr(comma + 1));
  if (u == v) throw std::invalid_argument("edge endpoints must differ");
  return {std::min(u, v), std::max(u, v)};
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << payload;
}

void emit_json(const Json& doc, const std::string& out_path) {
  emit(doc.dump(2) + "\n", out_path);
}

Json json_edge(Edge e) { return Json::array({e.first, e.second}); }

Json json_double_or_null(double x) {
  if (std::isfinite(x)) return x;
  return nullptr;
}

std::string hex_signature(const matchkit::BallSignature& sig) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(sig.size() * 2);
  for (unsigned char byte : sig) {
    out.push_back(digits[byte >> 4]);
    out.push_back(digits[byte & 15]);
  }
  return out;
}

Json stats_json(const Graph& g) {
  const auto stats = matchkit::matching_stats(g);
  Json doc;
  doc["schema"] = "1";
  doc["v"] = g.num_vertices();
  doc["total_matchings"] = matchkit::to_string(stats.total_matchings);
  doc["entropy_per_vertex"] = stats.entropy_per_vertex;
  doc["expected_size_normalized"] = stats.expected_size_normalized;
  doc["variance_normalized"] = stats.variance_normalized;
  doc["matching_ratio"] = matchkit::to_string(stats.matching_ratio);
  doc["pm_count"] = matchkit::to_string(stats.pm_count);
  doc["pm_entropy_per_vertex"] = json_double_or_null(stats.pm_entropy_per_vertex);
  return doc;
}

Json coefficients_json(const matchkit::CoefficientVector& c) {
  Json doc;
  doc["schema"] = "1";
  doc["kind"] = c.kind == matchkit::CoefficientKind::matching ? "matching" : "independence";
  Json coeffs = Json::array();
  for (const auto& value : c.coeffs) coeffs.push_back(matchkit::to_string(value));
  doc["coeffs"] = std::move(coeffs);
  doc["v"] = c.num_vertices;
  return doc;
}

Json measure_json(const matchkit::AtomicMeasure& m) {
  Json doc;
  doc["schema"] = "1";
  Json atoms = Json::array();
  for (const auto& atom : m.atoms) {
    atoms.push_back(Json{{"x", atom.location}, {"w", matchkit::to_string(atom.weight)}});
  }
  doc["atoms"] = std::move(atoms);
  doc["mass"] = matchkit::to_string(m.total_mass);
  return doc;
}

Json complex_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json mckay_json(int d) {
  const auto params = matchkit::mckay::params(d);
  const auto limits = matchkit::mckay::theorem_limits(d);
  const auto gurvits = matchkit::mckay::gurvits_max(d);
  const std::complex<double> i(0.0, 1.0);
  const auto log_closed = matchkit::mckay::log_integral(d, i);
  const auto rec_closed = matchkit::mckay::reciprocal_integral(d, i);
  const auto der_closed = matchkit::mckay::derivative_integral(d);
  const double logabs_closed = matchkit::mckay::log_abs_integral(d);
  Json doc;
  doc["schema"] = "1";
  doc["d"] = d;
  doc["omega"] = params.omega;
  doc["xi"] = params.xi;
  doc["S_d"] = params.S_d;
  doc["schrijver_exponent"] = params.schrijver_exponent;
  doc["limits"] = Json{{"entropy", limits.entropy_limit},
                       {"expectation", limits.expectation_limit},
                       {"variance", limits.variance_limit},
                       {"pm_entropy", limits.pm_entropy_limit}};
  doc["gurvits"] = Json{{"argmax", gurvits.argmax}, {"value", gurvits.value}};
  doc["integrals_at_i"] = Json{{"log", complex_json(log_closed)},
                               {"reciprocal", complex_json(rec_closed)},
                               {"derivative", complex_json(der_closed)},
                               {"log_abs", logabs_closed}};
  doc["quadrature_residuals"] =
      Json{{"mass", std::abs(matchkit::mckay::quadrature::mass(d) - 1.0)},
           {"log", std::abs(matchkit::mckay::quadrature::log_integral(d, i) - log_closed)},
           {"reciprocal",
            std::abs(matchkit::mckay::quadrature::reciprocal_integral(d, i) - rec_closed)},
           {"derivative", std::abs(matchkit::mckay::quadrature::derivative_integral(d) - der_closed)},
           {"log_abs", std::abs(matchkit::mckay::quadrature::log_abs_integral(d) - logabs_closed)}};
  return doc;
}

matchkit::ExperimentManifest read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open manifest: " + path);
  Json doc = Json::parse(in);
  matchkit::ExperimentManifest manifest;
  manifest.family = doc.at("family").get<std::string>();
  if (doc.contains("d")) manifest.d = doc["d"].get<int>();
  if (doc.contains("g_min")) manifest.g_min = doc["g_min"].get<int>();
  manifest.sizes = doc.at("sizes").get<std::vector<int>>();
  if (doc.contains("r")) manifest.r = doc["r"].get<int>();
  if (doc.contains("seed")) manifest.seed = doc["seed"].get<std::uint64_t>();
  return manifest;
}

Json divergence_json(const matchkit::DivergenceReport& report) {
  Json doc;
  doc["schema"] = "1";
  doc["d"] = report.d;
  doc["r"] = report.r;
  Json pairs = Json::array();
  for (const auto& pair : report.pairs) {
    pairs.push_back(Json{{"label", pair.label},
                         {"v", pair.v},
                         {"p_e", matchkit::to_string(pair.p_e)},
                         {"p_f", matchkit::to_string(pair.p_f)},
                         {"pm_base", matchkit::to_string(pair.pm_base)},
                         {"pm_2g", matchkit::to_string(pair.pm_two)},
                         {"pm_tilde", matchkit::to_string(pair.pm_tilde)},
                         {"pm_tilde_verified", pair.pm_tilde_verified},
                         {"entropy_2g", pair.entropy_two},
                         {"entropy_tilde", pair.entropy_tilde},
                         {"entropy_gap", pair.entropy_gap},
                         {"tv", matchkit::to_string(pair.tv)},
                         {"tv_bound", matchkit::to_string(pair.tv_bound)}});
  }
  doc["pairs"] = std::move(pairs);
  return doc;
}

int run(int argc, char** argv) {
  CLI::App app{"matching polynomials, root measures and local graph statistics"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "max worker threads (results are thread-count independent)")
      ->check(CLI::Range(1, 64));

  std::string graph_path, graph_path_b, out_path, json_path, edge_text, edge_text_f, kind = "matching";
  std::string manifest_path, out_prefix;
  int n = 0, a = 0, b = 0, d = 3, gmin = 6, r = 1, side = 3, fold = 1, max_v = 7, nodes = 0;
  std::uint64_t seed = 1;
  bool all_matchings = false, no_simple = false;

  auto* gen = app.add_subcommand("gen", "generate or transform graphs (text format)");
  gen->require_subcommand(1);
  auto add_out = [&out_path](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output path (default: stdout)");
  };
  auto* gen_cycle = gen->add_subcommand("cycle", "cycle C_n");
  gen_cycle->add_option("--n", n, "number of vertices")->required();
  add_out(gen_cycle);
  auto* gen_kab = gen->add_subcommand("complete-bipartite", "complete bipartite K_{a,b}");
  gen_kab->add_option("--a", a, "first side")->required();
  gen_kab->add_option("--b", b, "second side")->required();
  add_out(gen_kab);
  auto* gen_reg = gen->add_subcommand("regular", "random d-regular graph (pairing model)");
  gen_reg->add_option("--n", n, "number of vertices")->required();
  gen_reg->add_option("--d", d, "degree")->required();
  gen_reg->add_option("--seed", seed, "RNG seed (default 1)");
  add_out(gen_reg);
  auto* gen_breg = gen->add_subcommand("bipartite-regular", "union of d random permutations");
  gen_breg->add_option("--side", side, "vertices per side")->required();
  gen_breg->add_option("--d", d, "degree")->required();
  gen_breg->add_option("--seed", seed, "RNG seed (default 1)");
  add_out(gen_breg);
  auto* gen_girth = gen->add_subcommand("large-girth", "d-regular graph with girth >= gmin");
  gen_girth->add_option("--n", n, "number of vertices")->required();
  gen_girth->add_option("--d", d, "degree")->required();
  gen_girth->add_option("--gmin", gmin, "minimum girth")->required();
  gen_girth->add_option("--seed", seed, "RNG seed (default 1)");
  add_out(gen_girth);
  auto* gen_line = gen->add_subcommand("line-graph", "line graph of an input graph");
  gen_line->add_option("--graph", graph_path, "input graph file")->required();
  add_out(gen_line);
  auto* gen_tensor = gen->add_subcommand("tensor-k2", "bipartite double cover G x K_2");
  gen_tensor->add_option("--graph", graph_path, "input graph file")->required();
  add_out(gen_tensor);

  auto* poly = app.add_subcommand("poly", "matching coefficients m_k as JSON");
  poly->add_option("--graph", graph_path, "input graph file")->required();
  add_out(poly);

  auto* indep = app.add_subcommand("indep", "independence coefficients i_k as JSON");
  indep->add_option("--graph", graph_path, "input graph file")->required();
  add_out(indep);

  auto* measure = app.add_subcommand("measure", "matching or independence root measure as JSON");
  measure->add_option("--graph", graph_path, "input graph file")->required();
  measure->add_option("--kind", kind, "matching | independence")
      ->check(CLI::IsMember({"matching", "independence"}));
  add_out(measure);

  auto* stats = app.add_subcommand("stats", "matching statistics as JSON");
  stats->add_option("--graph", graph_path, "input graph file")->required();
  add_out(stats);

  auto* pm = app.add_subcommand("pm", "perfect matching count");
  pm->add_option("--graph", graph_path, "input graph file")->required();
  add_out(pm);

  auto* edge_prob = app.add_subcommand("edge-prob", "exact edge probability");
  edge_prob->add_option("--graph", graph_path, "input graph file")->required();
  edge_prob->add_option("--edge", edge_text, "edge as 'u,v'")->required();
  edge_prob->add_flag("--all-matchings", all_matchings,
                      "P(e in M) over all matchings instead of perfect ones");
  add_out(edge_prob);

  auto* cover = app.add_subcommand("cover", "n-fold cover at an edge");
  cover->add_option("--graph", graph_path, "base graph file")->required();
  cover->add_option("--edge", edge_text, "edge as 'u,v'")->required();
  cover->add_option("--n", fold, "fold count")->required();
  cover->add_option("--out", out_path, "cover graph output path")->required();
  cover->add_option("--json", json_path, "sidecar JSON path (default: stdout)");

  auto* construct = app.add_subcommand("construct", "paper constructions");
  construct->require_subcommand(1);
  auto* c52 = construct->add_subcommand("theorem52", "p(e) = 1/((d-1)^n+1) graph");
  c52->add_option("--d", d, "degree")->required();
  c52->add_option("--n", fold, "fold count")->required();
  c52->add_flag("--no-simple", no_simple, "2-point base variant (simple output only for d <= 2)");
  c52->add_option("--out", out_path, "graph output path")->required();
  c52->add_option("--json", json_path, "sidecar JSON path (default: stdout)");
  auto* cskew = construct->add_subcommand("skewed", "p(e) > 1/2 via iterated covers");
  cskew->add_option("--d", d, "degree (>= 3)")->required();
  cskew->add_option("--out", out_path, "graph output path")->required();
  cskew->add_option("--json", json_path, "sidecar JSON path (default: stdout)");
  auto* cgap = construct->add_subcommand("gap", "2G vs G-tilde pair");
  cgap->add_option("--graph", graph_path, "base graph file")->required();
  cgap->add_option("--e", edge_text, "first edge 'u,v'")->required();
  cgap->add_option("--f", edge_text_f, "adjacent edge 'u,v'")->required();
  cgap->add_option("--out-prefix", out_prefix, "writes <prefix>_2g.txt and <prefix>_tilde.txt")
      ->required();
  cgap->add_option("--json", json_path, "sidecar JSON path (default: stdout)");

  auto* mckay_cmd = app.add_subcommand("mckay", "Kesten-McKay constants and integrals");
  mckay_cmd->add_option("--d", d, "degree (>= 3)")->required();
  add_out(mckay_cmd);

  auto* expander = app.add_subcommand("expander", "delta-expander report");
  expander->add_option("--graph", graph_path, "input graph file")->required();
  expander->add_option("--edge", edge_text, "optional edge 'u,v' for per-edge checks");
  add_out(expander);

  auto* bs_stats_cmd = app.add_subcommand("bs-stats", "exact r-ball distribution");
  bs_stats_cmd->add_option("--graph", graph_path, "input graph file")->required();
  bs_stats_cmd->add_option("--r", r, "ball radius")->required();
  add_out(bs_stats_cmd);

  auto* bs_dist = app.add_subcommand("bs-dist", "TV distance of two r-ball distributions");
  bs_dist->add_option("--a", graph_path, "first graph file")->required();
  bs_dist->add_option("--b", graph_path_b, "second graph file")->required();
  bs_dist->add_option("--r", r, "ball radius")->required();
  add_out(bs_dist);

  auto* converge = app.add_subcommand("converge", "convergence experiment CSV from a manifest");
  converge->add_option("--manifest", manifest_path, "manifest JSON path")->required();
  add_out(converge);

  auto* diverge = app.add_subcommand("diverge", "pm-entropy divergence experiment");
  diverge->add_option("--d", d, "degree (>= 3)")->required();
  diverge->add_option("--r", r, "ball radius for the TV column (default 1)");
  add_out(diverge);

  auto* quad = app.add_subcommand("quadrature", "Gauss rule from matching-measure moments");
  quad->add_option("--graph", graph_path, "input graph file")->required();
  quad->add_option("--nodes", nodes, "number of quadrature nodes")->required();
  add_out(quad);

  auto* selftest = app.add_subcommand("selftest", "exhaustive identity suite over small graphs");
  selftest->add_option("--max-v", max_v, "largest vertex count (default 7)")->check(CLI::Range(1, 7));

  CLI11_PARSE(app, argc, argv);
  matchkit::set_max_threads(threads);

  if (gen_cycle->parsed()) {
    emit(matchkit::graph_to_string(matchkit::make_cycle(n)), out_path);
  } else if (gen_kab->parsed()) {
    emit(matchkit::graph_to_string(matchkit::make_complete_bipartite(a, b)), out_path);
  } else if (gen_reg->parsed()) {
    emit(matchkit::graph_to_string(matchkit::random_regular(n, d, seed)), out_path);
  } else if (gen_breg->parsed()) {
    emit(matchkit::graph_to_string(matchkit::random_bipartite_regular(side, d, seed)), out_path);
  } else if (gen_girth->parsed()) {
    emit(matchkit::graph_to_string(matchkit::large_girth_regular(n, d, gmin, seed)), out_path);
  } else if (gen_line->parsed()) {
    emit(matchkit::graph_to_string(matchkit::line_graph(matchkit::read_graph_file(graph_path))),
         out_path);
  } else if (gen_tensor->parsed()) {
    emit(matchkit::graph_to_string(matchkit::tensor_with_k2(matchkit::read_graph_file(graph_path))),
         out_path);
  } else if (poly->parsed()) {
    emit_json(coefficients_json(matchkit::matching_coefficients(matchkit::read_graph_file(graph_path))),
              out_path);
  } else if (indep->parsed()) {
    emit_json(
        coefficients_json(matchkit::independence_coefficients(matchkit::read_graph_file(graph_path))),
        out_path);
  } else if (measure->parsed()) {
    const Graph g = matchkit::read_graph_file(graph_path);
    emit_json(measure_json(kind == "matching" ? matchkit::matching_measure(g)
                                              : matchkit::independence_measure(g)),
              out_path);
  } else if (stats->parsed()) {
    emit_json(stats_json(matchkit::read_graph_file(graph_path)), out_path);
  } else if (pm->parsed()) {
    const Graph g = matchkit::read_graph_file(graph_path);
    const auto sides = matchkit::bipartition(g);
    const bool by_permanent = g.num_vertices() % 2 == 0 && sides &&
                              sides->first.size() == sides->second.size() &&
                              static_cast<int>(sides->first.size()) <= matchkit::kPermanentSideCap;
    Json doc;
    doc["schema"] = "1";
    doc["v"] = g.num_vertices();
    doc["pm"] = matchkit::to_string(matchkit::pm_count(g));
    doc["method"] = by_permanent ? "permanent" : "coefficients";
    emit_json(doc, out_path);
  } else if (edge_prob->parsed()) {
    const Graph g = matchkit::read_graph_file(graph_path);
    const Edge e = parse_edge(edge_text);
    Json doc;
    doc["schema"] = "1";
    doc["edge"] = json_edge(e);
    doc["model"] = all_matchings ? "all-matchings" : "perfect-matchings";
    doc["p"] = matchkit::to_string(all_matchings ? matchkit::all_matchings_edge_probability(g, e)
                                                 : matchkit::edge_probability(g, e));
    emit_json(doc, out_path);
  } else if (cover->parsed()) {
    const Graph base = matchkit::read_graph_file(graph_path);
    const Edge e = parse_edge(edge_text);
    const auto result = matchkit::n_fold_cover({base, e, fold});
    matchkit::write_graph_file(out_path, result.graph);
    const Rational p_base = matchkit::edge_probability(base, e);
    Json doc;
    doc["schema"] = "1";
    doc["fold"] = fold;
    doc["base_edge"] = json_edge(e);
    doc["p_base"] = matchkit::to_string(p_base);
    Json new_edges = Json::array();
    for (const auto& ne : result.new_edges) new_edges.push_back(json_edge(ne));
    doc["new_edges"] = std::move(new_edges);
    bool verified = false;
    if (p_base > 0 && p_base < 1) {
      const Rational p_new = matchkit::cover_edge_probability_formula(p_base, fold);
      doc["p"] = matchkit::to_string(p_new);
      const auto cover_sides = matchkit::bipartition(result.graph);
      if (cover_sides &&
          static_cast<int>(cover_sides->first.size()) <= matchkit::kPermanentSideCap) {
        verified = matchkit::edge_probability(result.graph, result.new_edges.front()) == p_new;
      }
    } else {
      doc["p"] = matchkit::to_string(p_base);  // p in {0,1} is preserved by the cover
    }
    doc["verified"] = verified;
    emit_json(doc, json_path);
  } else if (c52->parsed()) {
    const auto built = matchkit::build_theorem52_graph(d, fold, !no_simple);
    matchkit::write_graph_file(out_path, built.graph);
    Json doc;
    doc["schema"] = "1";
    doc["d"] = d;
    doc["n"] = fold;
    doc["simple"] = !no_simple;
    doc["v"] = built.graph.num_vertices();
    doc["edge"] = json_edge(built.edge);
    doc["p"] = matchkit::to_string(built.predicted_p);
    doc["verified"] = built.verified;
    emit_json(doc, json_path);
  } else if (cskew->parsed()) {
    const auto built = matchkit::build_skewed_graph(d);
    matchkit::write_graph_file(out_path, built.graph);
    Json doc;
    doc["schema"] = "1";
    doc["d"] = d;
    doc["v"] = built.graph.num_vertices();
    doc["edge"] = json_edge(built.edge);
    doc["p"] = matchkit::to_string(built.predicted_p);
    doc["verified"] = built.verified;
    Json steps = Json::array();
    for (const auto& step : built.sequence) {
      steps.push_back(Json{{"i", step.index + 1}, {"n", step.fold}});
    }
    doc["sequence"] = std::move(steps);
    Json probs = Json::array();
    for (const auto& value : built.probabilities) probs.push_back(matchkit::to_string(value));
    doc["probabilities"] = std::move(probs);
    doc["n0"] = built.half_size;
    doc["implied_c"] = built.implied_c;
    emit_json(doc, json_path);
  } else if (cgap->parsed()) {
    const Graph base = matchkit::read_graph_file(graph_path);
    const Edge e = parse_edge(edge_text);
    const Edge f = parse_edge(edge_text_f);
    const auto pair = matchkit::build_gap_pair(base, e, f);
    matchkit::write_graph_file(out_prefix + "_2g.txt", pair.two_g);
    matchkit::write_graph_file(out_prefix + "_tilde.txt", pair.tilde_g);
    const Rational p_e = matchkit::edge_probability(base, e);
    const Rational p_f = matchkit::edge_probability(base, f);
    const Integer pm_base = matchkit::pm_count(base);
    const Rational mixture = p_e * p_f + (1 - p_e) * (1 - p_f);
    const Rational predicted = Rational(pm_base * pm_base) * mixture;
    Json doc;
    doc["schema"] = "1";
    doc["v"] = pair.two_g.num_vertices();
    doc["e"] = json_edge(e);
    doc["f"] = json_edge(f);
    doc["p_e"] = matchkit::to_string(p_e);
    doc["p_f"] = matchkit::to_string(p_f);
    doc["pm_base"] = matchkit::to_string(pm_base);
    doc["pm_2g"] = matchkit::to_string(Integer(pm_base * pm_base));
    doc["pm_tilde"] = matchkit::to_string(boost::multiprecision::numerator(predicted));
    const auto tilde_sides = matchkit::bipartition(pair.tilde_g);
    bool verified = false;
    if (tilde_sides && tilde_sides->first.size() == tilde_sides->second.size() &&
        static_cast<int>(tilde_sides->first.size()) <= matchkit::kPermanentSideCap) {
      verified = Rational(matchkit::permanent_pm_count(pair.tilde_g)) == predicted;
    }
    doc["verified"] = verified;
    doc["touched"] = pair.touched;
    emit_json(doc, json_path);
  } else if (mckay_cmd->parsed()) {
    emit_json(mckay_json(d), out_path);
  } else if (expander->parsed()) {
    const Graph g = matchkit::read_graph_file(graph_path);
    const auto report = matchkit::compute_delta(g);
    Json doc;
    doc["schema"] = "1";
    doc["v"] = g.num_vertices();
    doc["delta"] = matchkit::to_string(report.delta);
    doc["vacuous"] = report.vacuous;
    doc["witness"] = report.witness;
    doc["witness_side"] = report.witness_side;
    const bool has_pm = matchkit::pm_count(g) > 0;
    if (has_pm && g.num_edges() > 0) {
      const auto extremes = matchkit::edge_probability_extremes(g);
      doc["p_min"] = matchkit::to_string(extremes.p_min);
      doc["p_max"] = matchkit::to_string(extremes.p_max);
      int violations = 0, checked = 0;
      for (const auto& edge : g.edges()) {
        const auto check = matchkit::theorem19_check(g, edge);
        if (!check.applicable) break;
        ++checked;
        if (!check.holds) ++violations;
      }
      doc["theorem19"] = Json{{"checked", checked}, {"violations", violations}};
    } else {
      doc["p_min"] = nullptr;
      doc["p_max"] = nullptr;
      doc["theorem19"] = Json{{"checked", 0}, {"violations", 0}};
    }
    if (!edge_text.empty()) {
      const Edge e = parse_edge(edge_text);
      Json detail;
      if (has_pm) {
        const auto t19 = matchkit::theorem19_check(g, e);
        detail["p"] = matchkit::to_string(matchkit::edge_probability(g, e));
        detail["theorem19_applicable"] = t19.applicable;
        detail["theorem19_bound"] = t19.bound;
        detail["theorem19_holds"] = t19.holds;
        const auto pms = matchkit::enumerate_perfect_matchings(g, 1);
        const auto cycle = matchkit::shortest_alternating_cycle_through(g, pms.front(), e);
        detail["alternating_cycle"] = cycle ? Json(*cycle) : Json(nullptr);
      }
      const auto p65 = matchkit::prop65_check(g, e);
      detail["prop65_probability"] = matchkit::to_string(p65.probability);
      detail["prop65_bound"] = matchkit::to_string(p65.bound);
      detail["prop65_holds"] = p65.holds;
      doc["edge"] = std::move(detail);
    }
    emit_json(doc, out_path);
  } else if (bs_stats_cmd->parsed()) {
    const Graph g = matchkit::read_graph_file(graph_path);
    const auto dist = matchkit::ball_distribution(g, r);
    Json doc;
    doc["schema"] = "1";
    doc["r"] = dist.r;
    doc["total"] = dist.total;
    Json types = Json::array();
    for (const auto& [sig, count] : dist.counts) {
      types.push_back(Json{{"signature", hex_signature(sig)},
                           {"count", count},
                           {"freq", matchkit::to_string(Rational(count, dist.total))}});
    }
    doc["types"] = std::move(types);
    emit_json(doc, out_path);
  } else if (bs_dist->parsed()) {
    const auto da = matchkit::ball_distribution(matchkit::read_graph_file(graph_path), r);
    const auto db = matchkit::ball_distribution(matchkit::read_graph_file(graph_path_b), r);
    Json doc;
    doc["schema"] = "1";
    doc["r"] = r;
    doc["tv"] = matchkit::to_string(matchkit::tv_distance(da, db));
    emit_json(doc, out_path);
  } else if (converge->parsed()) {
    const auto rows = matchkit::run_convergence_experiment(read_manifest(manifest_path));
    emit(matchkit::experiment_csv(rows), out_path);
  } else if (diverge->parsed()) {
    emit_json(divergence_json(matchkit::run_divergence_experiment(d, r)), out_path);
  } else if (quad->parsed()) {
    const Graph g = matchkit::read_graph_file(graph_path);
    const auto coeffs = matchkit::matching_coefficients(g);
    const auto moments = matchkit::moments_from_coefficients(coeffs, 2 * nodes);
    const auto rule = matchkit::quadrature_from_moments(moments, nodes);
    Json doc = measure_json(rule);
    const auto exact = matchkit::stats_from_coefficients(coeffs);
    const auto estimated = matchkit::stats_from_measure(rule, matchkit::CoefficientKind::matching);
    doc["entropy_estimate"] = estimated.entropy_per_vertex;
    doc["entropy_exact"] = exact.entropy_per_vertex;
    emit_json(doc, out_path);
  } else if (selftest->parsed()) {
    const auto report = matchkit::run_identity_suite(std::cout, max_v);
    std::cout << (report.ok() ? "selftest passed" : "selftest FAILED") << " ("
              << report.graphs_checked << " graphs)\n";
    return report.ok() ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const matchkit::ResourceCapError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResourceCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
