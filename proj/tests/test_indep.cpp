#include <doctest.h>

#include <cmath>

#include "berge/constructions.hpp"
#include "berge/indep.hpp"
#include "berge/peel.hpp"
#include "berge/polygons.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace berge;

TEST_SUITE("indep-solver") {
  TEST_CASE("alpha on small examples") {
    CHECK(alpha_exact(Hypergraph(3, 7)).lower == 7);
    AlphaResult fano = alpha_exact(fixtures::fano());
    CHECK(fano.exact);
    CHECK(fano.lower == 4);
    CHECK(fano.upper == 4);
    CHECK(fixtures::fano().is_independent(fano.witness));
    AlphaResult affine = alpha_exact(fixtures::affine_plane3());
    CHECK(affine.exact);
    CHECK(affine.lower == 4);
    CHECK(alpha_exact(Hypergraph(3, 3, {{0, 1, 2}})).lower == 2);
    CHECK(alpha_exact(Hypergraph(3, 0)).lower == 0);
  }

  TEST_CASE("alpha agrees with brute force") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const std::size_t n = 5 + seed % 8;
      Hypergraph h = fixtures::random_hypergraph(3, n, 2 + seed % 17, seed);
      AlphaResult a = alpha_exact(h);
      REQUIRE(a.exact);
      CHECK(a.lower == oracle::alpha(h));
      CHECK(a.witness.size() == a.lower);
      CHECK(h.is_independent(a.witness));
    }
    Hypergraph g4 = fixtures::random_hypergraph(4, 10, 30, 4);
    CHECK(alpha_exact(g4).lower == oracle::alpha(g4));
  }

  TEST_CASE("alpha budget gives a bracket") {
    Graph g = incidence_gq(2);
    Hypergraph h = build_theorem2(g, *two_coloring(g), 3, 3, 1, 1).hypergraph;
    AlphaResult full = alpha_exact(h);
    REQUIRE(full.exact);
    AlphaResult cut = alpha_exact(h, 3);
    CHECK_FALSE(cut.exact);
    CHECK(cut.lower <= full.lower);
    CHECK(cut.upper >= full.lower);
    CHECK(h.is_independent(cut.witness));
  }

  TEST_CASE("independence probability estimates") {
    Hypergraph fano = fixtures::fano();
    CHECK(indep_prob_mc(fano, 0, 100, 1).estimate == 1.0);
    CHECK(indep_prob_mc(fano, 2, 100, 1).estimate == 1.0);
    StarSystem stars = star_system({3, 6, 2});
    CHECK(indep_prob_mc(stars.graph, 6, 50, 1).estimate == 0.0);
    CHECK_THROWS_AS(indep_prob_mc(fano, 8, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(indep_prob_mc(fano, 3, 0, 1), std::invalid_argument);

    const double exact = oracle::independence_probability(fano, 4);
    IndepProbEstimate est = indep_prob_mc(fano, 4, 40000, 7);
    CHECK(est.trials == 40000);
    CHECK(std::abs(est.estimate - exact) <= est.half_width);
    CHECK(est.half_width == doctest::Approx(2.576 * est.std_error));
    CHECK(indep_prob_mc(fano, 4, 40000, 7).hits == est.hits);
  }

  TEST_CASE("estimate intervals cover the exact value") {
    Hypergraph h = fixtures::random_hypergraph(3, 10, 12, 5);
    const double exact = oracle::independence_probability(h, 5);
    int covered = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      IndepProbEstimate est = indep_prob_mc(h, 5, 2000, seed);
      covered += std::abs(est.estimate - exact) <= est.half_width;
    }
    // 99% intervals; 36 of 40 fails with probability well below 1e-3.
    CHECK(covered >= 36);
  }

  TEST_CASE("random independent sets on the affine plane") {
    Hypergraph h = fixtures::affine_plane3();
    double total = 0;
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
      total += static_cast<double>(random_indep_set(h, seed).size());
    }
    CHECK(total / 2000 >= 2.5);
  }
}
