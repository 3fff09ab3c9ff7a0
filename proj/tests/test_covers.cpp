#include "matchkit/canonical.hpp"
#include "matchkit/counting.hpp"
#include "matchkit/covers.hpp"
#include "matchkit/generators.hpp"

#include <doctest.h>

using namespace matchkit;

TEST_CASE("n-fold cover structure") {
  const Graph k33 = make_complete_bipartite(3, 3);
  const auto once = n_fold_cover({k33, Edge{0, 3}, 1});
  CHECK(canonical_form(once.graph) == canonical_form(k33));

  const auto twice = n_fold_cover({k33, Edge{0, 3}, 2});
  CHECK(twice.graph.num_vertices() == 12);
  CHECK(twice.graph.is_regular());
  CHECK(twice.graph.max_degree() == 3);
  CHECK(bipartition(twice.graph).has_value());
  CHECK(twice.new_edges.size() == 2);

  CHECK_THROWS_AS(n_fold_cover({make_cycle(5), Edge{0, 1}, 2}), std::invalid_argument);
  CHECK_THROWS_AS(n_fold_cover({k33, Edge{0, 1}, 2}), std::invalid_argument);
}

TEST_CASE("covers preserve regular bipartite structure, random suite") {
  int cases = 0;
  for (std::uint64_t seed = 1; cases < 200; ++seed) {
    const Graph base = random_bipartite_regular(4, 3, seed);
    if (permanent_pm_count(base) == 0) continue;
    const auto edges = base.edges();
    const Edge e = edges[seed % edges.size()];
    const int fold = 2 + static_cast<int>(seed % 2);
    const auto cover = n_fold_cover({base, e, fold});
    CHECK(cover.graph.num_vertices() == fold * base.num_vertices());
    CHECK(cover.graph.is_regular());
    CHECK(cover.graph.max_degree() == 3);
    CHECK(bipartition(cover.graph).has_value());
    ++cases;
  }
}

TEST_CASE("cover edge probability formula") {
  CHECK(cover_edge_probability_formula(Rational(1, 3), 2) == Rational(1, 5));
  CHECK(cover_edge_probability_formula(Rational(1, 2), 5) == Rational(1, 2));
  CHECK(cover_edge_probability_formula(Rational(1, 3), 3) == Rational(1, 9));  // x = 2
  CHECK_THROWS_AS(cover_edge_probability_formula(Rational(1), 2), std::invalid_argument);
}

TEST_CASE("formula matches exact probabilities on realized covers") {
  const Graph k33 = make_complete_bipartite(3, 3);
  const Edge e{0, 3};
  const Rational p = edge_probability(k33, e);
  for (int fold = 1; fold <= 3; ++fold) {
    const auto cover = n_fold_cover({k33, e, fold});
    const Rational predicted = cover_edge_probability_formula(p, fold);
    for (const auto& ne : cover.new_edges) {
      CHECK(edge_probability(cover.graph, ne) == predicted);
    }
    // adjacent-edge law: p(f') = p(f)(1 - p(e'))/(1 - p(e)) for f at the
    // same vertex, realized in copy 0
    const Rational adjacent = edge_probability(cover.graph, Edge{0, 4});
    CHECK(adjacent == p * (1 - predicted) / (1 - p));
  }
}

TEST_CASE("T maps") {
  const RationalVector uniform{Rational(1, 3), Rational(1, 3), Rational(1, 3)};
  const auto step1 = apply_T(2, 2, uniform);
  CHECK(step1 == RationalVector{Rational(2, 5), Rational(2, 5), Rational(1, 5)});
  const auto step2 = apply_T(1, 3, step1);
  CHECK(step2 == RationalVector{Rational(18, 35), Rational(8, 35), Rational(9, 35)});
  // 1-fold cover changes nothing
  CHECK(apply_T(0, 1, step2) == step2);
  CHECK_THROWS_AS(apply_T(0, 2, RationalVector{Rational(1), Rational(1, 2)}),
                  std::invalid_argument);

  // image stays a probability vector at the vertex
  Rational sum(0);
  for (const auto& entry : step2) sum += entry;
  CHECK(sum == 1);
}

TEST_CASE("find_T_sequence") {
  const auto d3 = find_T_sequence(3);
  REQUIRE(d3.size() == 2);
  CHECK(d3[0].index == 2);
  CHECK(d3[0].fold == 2);
  CHECK(d3[1].index == 1);
  CHECK(d3[1].fold == 3);
  const auto image3 = apply_T_sequence(d3, RationalVector(3, Rational(1, 3)));
  CHECK(image3[0] == Rational(18, 35));

  for (int d = 4; d <= 6; ++d) {
    const auto seq = find_T_sequence(d);
    const auto image = apply_T_sequence(seq, RationalVector(static_cast<size_t>(d), Rational(1, d)));
    CHECK(image[0] > Rational(1, 2));
    for (const auto& entry : image) {
      CHECK(entry > 0);
      CHECK(entry <= 1);
    }
    // deterministic
    const auto again = find_T_sequence(d);
    CHECK(seq.size() == again.size());
    for (size_t i = 0; i < seq.size(); ++i) {
      CHECK(seq[i].index == again[i].index);
      CHECK(seq[i].fold == again[i].fold);
    }
  }
}

TEST_CASE("theorem 5.2 builder") {
  for (int n = 1; n <= 3; ++n) {
    const auto built = build_theorem52_graph(3, n);
    CHECK(built.graph.num_vertices() == 6 * n);
    CHECK(built.graph.is_regular());
    CHECK(built.predicted_p == Rational(1, integer_pow(2, static_cast<unsigned>(n)) + 1));
    CHECK(built.verified);
  }
  const auto d2 = build_theorem52_graph(2, 4);
  CHECK(d2.predicted_p == Rational(1, 2));
  CHECK(d2.verified);
  const auto d1 = build_theorem52_graph(1, 3, false);
  CHECK(d1.predicted_p == 1);
  CHECK(d1.verified);
  const auto c2n = build_theorem52_graph(2, 4, false);
  CHECK(c2n.graph.num_vertices() == 8);
  CHECK(c2n.verified);
  CHECK_THROWS_AS(build_theorem52_graph(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_theorem52_graph(3, 2, false), std::invalid_argument);
}

TEST_CASE("skewed build for d = 3") {
  const auto built = build_skewed_graph(3);
  CHECK(built.graph.num_vertices() == 36);
  CHECK(built.graph.is_regular());
  CHECK(built.graph.max_degree() == 3);
  CHECK(built.predicted_p == Rational(18, 35));
  CHECK(built.probabilities ==
        RationalVector{Rational(18, 35), Rational(8, 35), Rational(9, 35)});
  CHECK(built.verified);  // exact permanent check on the 36-vertex graph
  CHECK(built.half_size == 18);
  // baseline: the K_{3,3} start vector matches the actual edge probabilities
  const Graph k33 = make_complete_bipartite(3, 3);
  for (int j = 0; j < 3; ++j) CHECK(edge_probability(k33, Edge{0, 3 + j}) == Rational(1, 3));
}

TEST_CASE("one more 2-fold cover amplifies the skew per the formula") {
  const auto built = build_skewed_graph(3);
  const auto amplified = n_fold_cover({built.graph, built.edge, 2});
  const Rational predicted = cover_edge_probability_formula(built.predicted_p, 2);
  CHECK(predicted == Rational(324, 613));  // p^2/(p^2+(1-p)^2) with p = 18/35
  // 72 vertices: sides are 36, beyond the exact permanent cap, so this stays
  // a formula-level prediction here.
  CHECK(amplified.graph.num_vertices() == 72);
}

TEST_CASE("gap pair") {
  const Graph k33 = make_complete_bipartite(3, 3);
  const auto pair = build_gap_pair(k33, Edge{0, 3}, Edge{0, 4});
  CHECK(pair.two_g.num_vertices() == 12);
  CHECK(pair.tilde_g.num_vertices() == 12);
  CHECK(pair.two_g.num_edges() == pair.tilde_g.num_edges());
  CHECK(pair.tilde_g.is_regular());
  CHECK(permanent_pm_count(pair.two_g) == 36);
  CHECK(permanent_pm_count(pair.tilde_g) == 20);
  // identical degree sequences
  for (int v = 0; v < 12; ++v) CHECK(pair.two_g.degree(v) == pair.tilde_g.degree(v));
  CHECK_THROWS_AS(build_gap_pair(k33, Edge{0, 3}, Edge{1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(build_gap_pair(k33, Edge{0, 3}, Edge{0, 3}), std::invalid_argument);
}

TEST_CASE("gap pair pm identity on random bipartite regular bases") {
  int cases = 0;
  for (std::uint64_t seed = 1; cases < 10; ++seed) {
    const Graph base = random_bipartite_regular(4, 3, seed);
    if (permanent_pm_count(base) == 0) continue;
    // pick adjacent edges at vertex 0
    const auto nbrs = base.neighbors(0);
    const Edge e{0, nbrs[0]};
    const Edge f{0, nbrs[1]};
    const Rational pe = edge_probability(base, e);
    const Rational pf = edge_probability(base, f);
    const auto pair = build_gap_pair(base, e, f);
    const Integer pm_base = permanent_pm_count(base);
    const Rational predicted = Rational(pm_base * pm_base) * (pe * pf + (1 - pe) * (1 - pf));
    CHECK(Rational(permanent_pm_count(pair.tilde_g)) == predicted);
    ++cases;
  }
}
