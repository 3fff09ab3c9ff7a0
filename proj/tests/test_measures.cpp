#include "matchkit/counting.hpp"
#include "matchkit/generators.hpp"
#include "matchkit/measures.hpp"

#include <doctest.h>

#include <cmath>

using namespace matchkit;

TEST_CASE("matching measure atoms") {
  const auto k2 = matching_measure(make_complete_bipartite(1, 1));
  REQUIRE(k2.atoms.size() == 2);
  CHECK(k2.atoms[0].location == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(k2.atoms[1].location == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(k2.atoms[0].weight == Rational(1, 2));
  CHECK(k2.total_mass == 1);

  const auto c4 = matching_measure(make_cycle(4));
  REQUIRE(c4.atoms.size() == 4);
  CHECK(c4.atoms[3].location == doctest::Approx(std::sqrt(2.0 + std::sqrt(2.0))).epsilon(1e-12));
  CHECK(c4.atoms[2].location == doctest::Approx(std::sqrt(2.0 - std::sqrt(2.0))).epsilon(1e-12));
  for (const auto& atom : c4.atoms) CHECK(atom.weight == Rational(1, 4));

  const auto p3 = matching_measure(make_path(3));
  REQUIRE(p3.atoms.size() == 3);
  CHECK(p3.atoms[0].location == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
  CHECK(p3.atoms[1].location == 0.0);
  CHECK(p3.atoms[1].weight == Rational(1, 3));

  // repeated components give exact multiplicity weights
  const Graph two_k2 = disjoint_union(make_complete_bipartite(1, 1), make_complete_bipartite(1, 1));
  const auto repeated = matching_measure(two_k2);
  REQUIRE(repeated.atoms.size() == 2);
  CHECK(repeated.atoms[0].weight == Rational(1, 2));
}

TEST_CASE("matching measure symmetry") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto m = matching_measure(random_regular(12, 3, seed));
    for (size_t i = 0; i < m.atoms.size(); ++i) {
      const auto& mirrored = m.atoms[m.atoms.size() - 1 - i];
      CHECK(m.atoms[i].location == doctest::Approx(-mirrored.location).epsilon(1e-12));
      CHECK(m.atoms[i].weight == mirrored.weight);
    }
    CHECK(m.total_mass == 1);
  }
}

TEST_CASE("independence measure") {
  const auto k2 = independence_measure(make_complete_bipartite(1, 1));
  REQUIRE(k2.atoms.size() == 1);
  CHECK(k2.atoms[0].location == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(k2.atoms[0].weight == Rational(1, 2));
  CHECK(k2.total_mass == Rational(1, 2));

  const auto empty2 = independence_measure(Graph(2));
  REQUIRE(empty2.atoms.size() == 1);
  CHECK(empty2.atoms[0].location == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(empty2.atoms[0].weight == 1);
  CHECK(empty2.total_mass == 1);

  const auto c5 = independence_measure(make_cycle(5));
  REQUIRE(c5.atoms.size() == 2);
  CHECK(c5.total_mass == Rational(2, 5));

  // K_{1,3} has complex independence roots and is rejected
  CHECK_THROWS_AS(independence_measure(make_complete_bipartite(1, 3)), RootSolveError);
}

TEST_CASE("root bound checks") {
  for (int n = 3; n <= 9; ++n) CHECK(heilmann_lieb_check(make_cycle(n)));
  CHECK(heilmann_lieb_check(make_complete(4)));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CHECK(heilmann_lieb_check(random_regular(16, 3, seed)));
    CHECK(dobrushin_bound_check(random_regular(16, 3, seed)));
  }
  CHECK(dobrushin_bound_check(make_complete_bipartite(1, 1)));
  CHECK(dobrushin_bound_check(make_cycle(3)));
  for (double r : {1.5, 2.0, 4.0, 8.0}) {
    CHECK(tail_bound_check(make_complete_bipartite(1, 1), r));
    CHECK(tail_bound_check(make_complete_bipartite(1, 3), r));  // modulus-only route
  }
  CHECK_THROWS_AS(tail_bound_check(make_cycle(4), 1.0), std::invalid_argument);
}

TEST_CASE("stats from measure agree with counting") {
  const auto c4_coeffs = matching_coefficients(make_cycle(4));
  const auto stats = stats_from_measure(matching_measure(c4_coeffs), CoefficientKind::matching);
  CHECK(stats.entropy_per_vertex == doctest::Approx(std::log(7.0) / 4).epsilon(1e-12));
  const auto direct = stats_from_coefficients(c4_coeffs);
  CHECK(stats.expected_size_normalized ==
        doctest::Approx(direct.expected_size_normalized).epsilon(1e-12));
  CHECK(stats.variance_normalized == doctest::Approx(direct.variance_normalized).epsilon(1e-12));
  CHECK(stats.ratio == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pm entropy from measure") {
  CHECK(pm_entropy_from_measure(matching_measure(make_cycle(6))) ==
        doctest::Approx(std::log(2.0) / 6).epsilon(1e-10));
  CHECK(pm_entropy_from_measure(matching_measure(make_path(3))) ==
        -std::numeric_limits<double>::infinity());
  CHECK(pm_entropy_from_measure(matching_measure(make_complete_bipartite(3, 3))) ==
        doctest::Approx(std::log(6.0) / 6).epsilon(1e-10));
}

TEST_CASE("moments from coefficients") {
  const Graph c4 = make_cycle(4);
  const auto moments = moments_from_coefficients(matching_coefficients(c4), 8);
  CHECK(moments.values[0] == 1);
  CHECK(moments.values[1] == 0);
  CHECK(moments.values[2] == 2);  // p_2/v = 2e/v
  CHECK(moments.values[3] == 0);
  CHECK(moments.values[4] == 6);  // p_4 = 24 over v = 4
  CHECK_THROWS_AS(moments_from_coefficients(matching_coefficients(c4), 65), ResourceCapError);
}

TEST_CASE("tree-like walk moments") {
  const Graph c4 = make_cycle(4);
  CHECK(tree_like_walk_moments(c4, 8).values == moments_from_coefficients(matching_coefficients(c4), 8).values);
  // d-regular: p_2 per vertex equals d
  const Graph reg = random_regular(10, 3, 2);
  CHECK(tree_like_walk_moments(reg, 2).values[2] == 3);
  // on a tree the path tree is the tree itself: moments match exactly
  const Graph path = make_path(6);
  CHECK(tree_like_walk_moments(path, 8).values ==
        moments_from_coefficients(matching_coefficients(path), 8).values);
  CHECK_THROWS_AS(tree_like_walk_moments(c4, 17), ResourceCapError);
}

TEST_CASE("quadrature from moments") {
  // single atom at zero
  MomentSequence point;
  point.values = {Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)};
  const auto rule = quadrature_from_moments(point, 2);
  REQUIRE(rule.atoms.size() == 1);
  CHECK(rule.atoms[0].location == doctest::Approx(0.0));
  CHECK(to_double(rule.atoms[0].weight) == doctest::Approx(1.0));

  // K_2: two nodes recover +-1 with weight 1/2
  const auto k2_moments = moments_from_coefficients(matching_coefficients(make_complete_bipartite(1, 1)), 4);
  const auto k2_rule = quadrature_from_moments(k2_moments, 2);
  REQUIRE(k2_rule.atoms.size() == 2);
  CHECK(k2_rule.atoms[0].location == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(to_double(k2_rule.atoms[0].weight) == doctest::Approx(0.5).epsilon(1e-10));

  // C_4 with 8 moments reproduces the entropy to 1e-6
  const auto c4_coeffs = matching_coefficients(make_cycle(4));
  const auto c4_rule = quadrature_from_moments(moments_from_coefficients(c4_coeffs, 8), 4);
  const double estimate = stats_from_measure(c4_rule, CoefficientKind::matching).entropy_per_vertex;
  CHECK(estimate == doctest::Approx(std::log(7.0) / 4).epsilon(1e-6));

  // rule with 2n moments integrates monomials up to degree 2n-1 exactly
  const Graph g = random_regular(12, 3, 4);
  const auto moments = moments_from_coefficients(matching_coefficients(g), 12);
  const auto gauss = quadrature_from_moments(moments, 6);
  for (int k = 0; k < 12; ++k) {
    double integral = 0.0;
    for (const auto& atom : gauss.atoms) {
      integral += to_double(atom.weight) * std::pow(atom.location, k);
    }
    CHECK(integral == doctest::Approx(to_double(moments.values[static_cast<size_t>(k)]))
                          .epsilon(1e-8));
  }

  CHECK_THROWS_AS(quadrature_from_moments(k2_moments, 3), std::invalid_argument);
}
