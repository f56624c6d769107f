#include <doctest.h>

#include <cmath>

#include "berge/deg_pipeline.hpp"
#include "berge/girth.hpp"
#include "berge/polygons.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

bool is_cycle_of(const Graph& g, const std::vector<VertexId>& cycle) {
  std::vector<VertexId> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

std::size_t crossing_at(const Graph& g, const Bipartition& parts, VertexId v) {
  std::vector<char> left(g.num_vertices(), 0);
  for (VertexId u : parts.left) left[u] = 1;
  std::size_t crossing = 0;
  for (VertexId w : g.neighbors(v)) crossing += left[w] != left[v];
  return crossing;
}

}  // namespace

TEST_SUITE("girth-lab") {
  TEST_CASE("girth examples") {
    CHECK(girth(cycle_graph(5)).girth == 5);
    CHECK(girth(path_graph(6)).is_forest());
    GirthReport heawood = girth(incidence_pp(2));
    CHECK(heawood.girth == 6);
    REQUIRE(heawood.shortest_cycle.has_value());
    CHECK(heawood.shortest_cycle->size() == 6);
    CHECK(is_cycle_of(incidence_pp(2), *heawood.shortest_cycle));
  }

  TEST_CASE("girth agrees with cycle enumeration") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
      Graph g = fixtures::random_graph(4 + seed % 7, 250 + 10 * (seed % 20), seed);
      GirthReport report = girth(g);
      const std::size_t expected = oracle::girth(g);
      if (expected == 0) {
        CHECK(report.is_forest());
      } else {
        CHECK(report.girth == expected);
        REQUIRE(report.shortest_cycle.has_value());
        CHECK(report.shortest_cycle->size() == expected);
        CHECK(is_cycle_of(g, *report.shortest_cycle));
      }
    }
  }

  TEST_CASE("generalized polygon parameters") {
    for (std::uint64_t q : {2, 3, 5}) {
      Graph pp = incidence_pp(q);
      CHECK(pp.num_vertices() == 2 * (q * q + q + 1));
      CHECK(pp.num_edges() == (q + 1) * (q * q + q + 1));
      CHECK(pp.min_degree() == q + 1);
      CHECK(pp.max_degree() == q + 1);
      CHECK(girth(pp).girth == 6);
      CHECK(two_coloring(pp).has_value());

      Graph gq = incidence_gq(q);
      CHECK(gq.num_vertices() == 2 * (q + 1) * (q * q + 1));
      CHECK(gq.num_edges() == (q + 1) * (q + 1) * (q * q + 1));
      CHECK(gq.min_degree() == q + 1);
      CHECK(gq.max_degree() == q + 1);
      CHECK(girth(gq).girth == 8);
    }
    CHECK(incidence_gq(2).num_edges() == 45);
    CHECK(incidence_gq(3).num_edges() == 160);
    CHECK_THROWS_AS(incidence_pp(4), std::invalid_argument);
    CHECK_THROWS_AS(incidence_gq(6), std::invalid_argument);
  }

  TEST_CASE("greedy high-girth bipartite generator") {
    for (std::size_t floor : {6, 8, 10}) {
      Graph g = random_high_girth_bipartite(20, 20, floor, 11, 4);
      GirthReport report = girth(g);
      CHECK((report.is_forest() || report.girth >= floor));
      CHECK(g.max_degree() <= 4);
      CHECK(g == random_high_girth_bipartite(20, 20, floor, 11, 4));
    }
  }

  TEST_CASE("max cut examples") {
    Graph c6 = cycle_graph(6);
    CHECK(max_cut_bipartite(c6, 1).crossing.num_edges() == 6);
    CHECK(max_cut_bipartite(complete_graph(3), 1).crossing.num_edges() == 2);
    Graph heawood = incidence_pp(2);
    CHECK(max_cut_bipartite(heawood, 3).crossing.num_edges() == 21);
  }

  TEST_CASE("max cut is a local optimum") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      Graph g = fixtures::random_graph(14, 350, seed);
      CutResult cut = max_cut_bipartite(g, seed);
      CHECK(is_valid_bipartition(cut.crossing, cut.parts));
      CHECK(2 * cut.crossing.num_edges() >= g.num_edges());
      for (VertexId v = 0; v < g.num_vertices(); ++v) {
        CHECK(2 * crossing_at(g, cut.parts, v) >= g.degree(v));
      }
    }
  }

  TEST_CASE("core peeling examples") {
    CHECK(peel_min_degree(path_graph(3), 1).num_vertices() == 0);
    CHECK(peel_min_degree(cycle_graph(6), 1) == cycle_graph(6));
    CHECK(peel_min_degree(incidence_pp(2), 2) == incidence_pp(2));
    CHECK_THROWS_AS(peel_min_degree(cycle_graph(4), -1), std::invalid_argument);
  }

  TEST_CASE("core peeling does not depend on labels") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      Graph g = fixtures::random_graph(16, 200, seed);
      Graph core = peel_min_degree(g, 2);
      std::vector<VertexId> perm(g.num_vertices());
      std::iota(perm.begin(), perm.end(), VertexId{0});
      Rng rng(seed);
      rng.shuffle(perm);
      Graph shuffled = g.induced(perm);
      Graph core2 = peel_min_degree(shuffled, 2);
      std::vector<VertexId> a, b;
      for (VertexId v = 0; v < core.num_vertices(); ++v) a.push_back(core.origin(v));
      for (VertexId v = 0; v < core2.num_vertices(); ++v) b.push_back(core2.origin(v));
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      CHECK(a == b);
      if (core.num_vertices() > 0) CHECK(core.min_degree() > 2);
    }
  }

  TEST_CASE("degree pipeline report is consistent") {
    Graph gq = incidence_gq(3);
    DegPipelineResult result = deg_pipeline(gq, 3, 5);
    const DegPipelineReport& r = result.report;
    const double n = static_cast<double>(gq.num_vertices());
    CHECK(r.c == doctest::Approx(160.0 / (2 * std::pow(n, 4.0 / 3.0))));
    CHECK(r.threshold == doctest::Approx(r.c * std::cbrt(n)));
    CHECK(r.survivors == result.graph.num_vertices());
    CHECK(r.min_degree == result.graph.min_degree());
    CHECK(r.max_degree == result.graph.max_degree());
    CHECK(static_cast<double>(result.graph.min_degree()) >= r.threshold);
    CHECK(r.min_degree_ok);
    CHECK(r.size_ok);
    CHECK(is_valid_bipartition(result.graph, result.parts));
    for (const GraphEdge& e : result.graph.edges()) {
      CHECK(gq.has_edge(result.graph.origin(e.first), result.graph.origin(e.second)));
    }
  }

  TEST_CASE("degree pipeline edge cases") {
    CHECK_THROWS_AS(deg_pipeline(cycle_graph(6), 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(deg_pipeline(incidence_pp(2), 1, 1), std::invalid_argument);
    DegPipelineResult c7 = deg_pipeline(cycle_graph(7), 3, 1);
    CHECK(c7.report.threshold < 1);
    CHECK(c7.report.min_degree_ok);
    DegPipelineResult low = deg_pipeline(incidence_pp(2), 2, 1);
    CHECK(low.report.k_below_three);
  }
}
