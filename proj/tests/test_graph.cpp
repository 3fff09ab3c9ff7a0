#include "matchkit/canonical.hpp"
#include "matchkit/enumerate.hpp"
#include "matchkit/generators.hpp"
#include "matchkit/graph.hpp"
#include "matchkit/graph_io.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>
#include <sstream>

using namespace matchkit;

TEST_CASE("basic generators") {
  const Graph triangle = make_cycle(3);
  CHECK(triangle.num_edges() == 3);
  CHECK(girth(triangle) == 3);
  CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);

  const Graph c4 = make_cycle(4);
  CHECK(girth(c4) == 4);
  CHECK(bipartition(c4).has_value());
  CHECK_FALSE(bipartition(make_cycle(5)).has_value());

  const Graph k33 = make_complete_bipartite(3, 3);
  CHECK(k33.num_edges() == 9);
  CHECK(k33.is_regular());
  const Graph k11 = make_complete_bipartite(1, 1);
  CHECK(k11.num_edges() == 1);
  const Graph k23 = make_complete_bipartite(2, 3);
  CHECK(k23.max_degree() == 3);
  CHECK_FALSE(k23.is_regular());
}

TEST_CASE("handshake identity on generated graphs") {
  for (const Graph& g : {make_cycle(7), make_complete_bipartite(2, 5), make_petersen(),
                         random_regular(10, 3, 5), large_girth_regular(14, 3, 6, 3)}) {
    long long degree_sum = 0;
    for (int v = 0; v < g.num_vertices(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2LL * g.num_edges());
  }
}

TEST_CASE("line graph") {
  // L(C_4) is C_4 again.
  CHECK(canonical_form(line_graph(make_cycle(4))) == canonical_form(make_cycle(4)));
  // L(K_{1,3}) is the triangle.
  CHECK(canonical_form(line_graph(make_complete_bipartite(1, 3))) == canonical_form(make_cycle(3)));
  const Graph k2 = make_complete_bipartite(1, 1);
  const Graph l = line_graph(k2);
  CHECK(l.num_vertices() == 1);
  CHECK(l.num_edges() == 0);
}

TEST_CASE("disjoint union") {
  const Graph k2 = make_complete_bipartite(1, 1);
  const Graph two = disjoint_union(k2, k2);
  CHECK(two.num_vertices() == 4);
  CHECK(two.num_edges() == 2);
  const Graph with_isolated = disjoint_union(two, Graph(1));
  CHECK(with_isolated.num_vertices() == 5);
  CHECK(with_isolated.num_edges() == 2);
  CHECK(girth(disjoint_union(make_cycle(3), make_cycle(4))) == 3);
}

TEST_CASE("tensor with K_2") {
  // C_5 x K_2 is C_10.
  CHECK(canonical_form(tensor_with_k2(make_cycle(5))) == canonical_form(make_cycle(10)));
  const Graph k2 = make_complete_bipartite(1, 1);
  const Graph doubled = tensor_with_k2(k2);
  CHECK(doubled.num_vertices() == 4);
  CHECK(doubled.num_edges() == 2);
  const Graph petersen_cover = tensor_with_k2(make_petersen());
  CHECK(petersen_cover.num_vertices() == 20);
  CHECK(petersen_cover.is_regular());
  CHECK(petersen_cover.max_degree() == 3);
  CHECK(bipartition(petersen_cover).has_value());
  CHECK(*girth(petersen_cover) >= 5);
}

TEST_CASE("girth and cycle counts") {
  CHECK(girth(make_cycle(7)) == 7);
  CHECK_FALSE(girth(make_path(6)).has_value());
  CHECK(girth(make_petersen()) == 5);
  CHECK(girth(make_lcf(14, {5, -5}, 7)) == 6);   // Heawood
  CHECK(girth(make_lcf(24, {12, 7, -7}, 8)) == 7);  // McGee

  CHECK(count_cycles(make_cycle(5), 5) == 1);
  CHECK(count_cycles(make_cycle(5), 4) == 0);
  CHECK(count_cycles(make_complete(4), 3) == 4);
  CHECK(count_cycles(make_petersen(), 5) == 12);
  CHECK_THROWS_AS(count_cycles(make_cycle(5), 13), ResourceCapError);

  // girth equals the smallest k with a k-cycle, across the v <= 7 suite
  for (const Graph& g : all_graphs_up_to(6)) {
    std::optional<int> smallest;
    for (int k = 3; k <= g.num_vertices() && !smallest; ++k) {
      if (count_cycles(g, k) > 0) smallest = k;
    }
    CHECK(girth(g) == smallest);
  }
}

TEST_CASE("bipartition splits") {
  const auto sides = bipartition(make_cycle(6));
  REQUIRE(sides.has_value());
  CHECK(sides->first.size() == 3);
  CHECK(sides->second.size() == 3);
  const auto k33 = bipartition(make_complete_bipartite(3, 3));
  REQUIRE(k33.has_value());
  CHECK(k33->first.size() == 3);
}

TEST_CASE("ball extraction") {
  const RootedBall ball = extract_ball(make_cycle(10), 3, 2);
  CHECK(ball.graph.num_vertices() == 5);
  CHECK(ball.graph.num_edges() == 4);  // a path
  const RootedBall point = extract_ball(make_petersen(), 0, 0);
  CHECK(point.graph.num_vertices() == 1);

  const Graph mcgee = make_lcf(24, {12, 7, -7}, 8);  // 3-regular, girth 7
  const RootedBall tree = extract_ball(mcgee, 5, 3);
  CHECK(tree.graph.num_vertices() == 22);
  CHECK(tree.graph.num_edges() == 21);  // tree: e = v - 1
}

TEST_CASE("canonical signatures") {
  const Graph c10 = make_cycle(10);
  CHECK(canonical_signature(extract_ball(c10, 0, 2)) == canonical_signature(extract_ball(c10, 7, 2)));
  const Graph star = make_complete_bipartite(1, 3);
  CHECK(canonical_signature(extract_ball(star, 0, 1)) != canonical_signature(extract_ball(star, 1, 1)));
  const Graph petersen = make_petersen();
  for (int v = 1; v < 10; ++v) {
    CHECK(canonical_signature(extract_ball(petersen, 0, 2)) ==
          canonical_signature(extract_ball(petersen, v, 2)));
  }
  CHECK_THROWS_AS(canonical_signature(extract_ball(make_cycle(300), 0, 200)), ResourceCapError);
}

TEST_CASE("canonical signature is isomorphism-invariant and complete") {
  // 100 random relabelings of a fixed ball keep the signature.
  const RootedBall ball = extract_ball(random_regular(12, 3, 11), 0, 2);
  const auto reference = canonical_signature(ball);
  DetRng rng(99);
  const int n = ball.graph.num_vertices();
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    rng.shuffle(perm);
    Graph relabeled(n);
    for (const auto& [u, v] : ball.graph.edges()) {
      relabeled.add_edge(perm[u], perm[v]);
    }
    RootedBall moved{relabeled, perm[ball.root], ball.radius};
    CHECK(canonical_signature(moved) == reference);
    CHECK(oracles::rooted_isomorphic(ball, moved));
  }
  // Signatures separate non-isomorphic rooted pairs (brute-force oracle).
  const Graph pool = make_lcf(14, {5, -5}, 7);
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) {
      const RootedBall ba = extract_ball(pool, a, 1);
      const RootedBall bb = extract_ball(pool.without_edge(0, 1), b, 1);
      CHECK((canonical_signature(ba) == canonical_signature(bb)) ==
            oracles::rooted_isomorphic(ba, bb));
    }
  }
}

TEST_CASE("random regular generators") {
  CHECK(canonical_form(random_regular(4, 3, 1)) == canonical_form(make_complete(4)));
  const Graph g = random_regular(10, 3, 42);
  CHECK(g.is_regular());
  CHECK(g.max_degree() == 3);
  CHECK_THROWS_AS(random_regular(5, 3, 1), std::invalid_argument);

  CHECK(canonical_form(random_bipartite_regular(3, 3, 9)) ==
        canonical_form(make_complete_bipartite(3, 3)));
  const Graph b = random_bipartite_regular(8, 3, 5);
  CHECK(b.is_regular());
  CHECK(b.num_edges() == 24);
  CHECK(bipartition(b).has_value());
  CHECK_THROWS_AS(random_bipartite_regular(2, 3, 1), std::invalid_argument);

  // determinism: identical seed, identical graph
  CHECK(random_regular(16, 3, 7).edges() == random_regular(16, 3, 7).edges());
  CHECK(random_bipartite_regular(6, 3, 7).edges() == random_bipartite_regular(6, 3, 7).edges());
  CHECK(large_girth_regular(16, 3, 6, 7).edges() == large_girth_regular(16, 3, 6, 7).edges());

  const Graph lg = large_girth_regular(14, 3, 6, 1);
  CHECK(lg.is_regular());
  CHECK(*girth(lg) >= 6);
  const Graph any_girth = large_girth_regular(8, 3, 3, 1);
  CHECK(*girth(any_girth) >= 3);
  CHECK_THROWS_AS(large_girth_regular(4, 3, 5, 1), ResourceCapError);
}

TEST_CASE("graph text round trip") {
  const Graph g = make_petersen();
  const std::string text = graph_to_string(g);
  CHECK(graph_from_string(text) == g);
  CHECK_THROWS_AS(graph_from_string("e 0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_string("p 3\ne 0 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_string("p 3\ne 1 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_string("p 3\ne 0 1\ne 0 1\n"), std::invalid_argument);
  CHECK(graph_from_string("# comment\np 2\ne 0 1\n").num_edges() == 1);
}

TEST_CASE("graph enumeration matches known counts") {
  const std::vector<size_t> expected{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) CHECK(all_graphs(n).size() == expected[static_cast<size_t>(n - 1)]);
}
