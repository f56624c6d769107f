#include <doctest.h>

#include <numeric>

#include "berge/edge_list.hpp"
#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"
#include "fixtures.hpp"

using namespace berge;

TEST_SUITE("hyperstructs") {
  TEST_CASE("degree on small fixtures") {
    Hypergraph single(3, 3, {{0, 1, 2}});
    CHECK(single.degree(0) == 1);
    Hypergraph empty(3, 4);
    for (VertexId v = 0; v < 4; ++v) CHECK(empty.degree(v) == 0);
    Hypergraph f = fixtures::fano();
    for (VertexId v = 0; v < 7; ++v) CHECK(f.degree(v) == 3);
    CHECK_THROWS_AS(f.degree(7), std::out_of_range);
  }

  TEST_CASE("codegree") {
    Hypergraph h(3, 4, {{0, 1, 2}, {0, 1, 3}});
    CHECK(h.codegree(0, 1) == 2);
    CHECK(h.codegree(2, 3) == 0);
    CHECK_THROWS_AS(h.codegree(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(4, 5, {{0, 1, 2, 3}}).codegree(0, 1), std::invalid_argument);
    Hypergraph f = fixtures::fano();
    for (VertexId u = 0; u < 7; ++u) {
      for (VertexId v = u + 1; v < 7; ++v) CHECK(f.codegree(u, v) == 1);
    }
  }

  TEST_CASE("construction rejects malformed edges") {
    CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, 2}, {2, 1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 4, {{0, 1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  }

  TEST_CASE("induced subgraphs keep origin ids") {
    Hypergraph single(3, 3, {{0, 1, 2}});
    std::vector<VertexId> all{0, 1, 2};
    CHECK(single.induced(all) == single);
    std::vector<VertexId> two{0, 1};
    Hypergraph sub = single.induced(two);
    CHECK(sub.num_vertices() == 2);
    CHECK(sub.num_edges() == 0);

    Hypergraph f = fixtures::fano();
    std::vector<VertexId> line{1, 3, 5};
    CHECK(f.induced(line).num_edges() == 1);

    std::vector<VertexId> outer{6, 5, 4, 3, 1};
    Hypergraph first = f.induced(outer);
    std::vector<VertexId> inner_local{1, 3, 4};  // vertices 5, 3, 1 of f
    Hypergraph twice = first.induced(inner_local);
    std::vector<VertexId> inner{5, 3, 1};
    Hypergraph direct = f.induced(inner);
    CHECK(twice == direct);
    for (VertexId v = 0; v < 3; ++v) CHECK(twice.origin(v) == direct.origin(v));
  }

  TEST_CASE("degree and codegree sums") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Hypergraph h = fixtures::random_hypergraph(3, 10, 15, seed);
      std::size_t degrees = 0;
      for (VertexId v = 0; v < h.num_vertices(); ++v) degrees += h.degree(v);
      CHECK(degrees == 3 * h.num_edges());
      std::size_t codegrees = 0;
      for (VertexId u = 0; u < h.num_vertices(); ++u) {
        for (VertexId v = u + 1; v < h.num_vertices(); ++v) codegrees += h.codegree(u, v);
      }
      CHECK(codegrees == 3 * h.num_edges());
    }
  }

  TEST_CASE("edge-list parsing") {
    Hypergraph h = parse_hypergraph("3 4 1\n0 1 2\n");
    CHECK(h.num_vertices() == 4);
    CHECK(h.num_edges() == 1);
    Graph tri = parse_graph("2 3 3\n0 1\n1 2\n0 2\n");
    CHECK(tri == complete_graph(3));

    Hypergraph messy = parse_hypergraph("# comment\n3 5 2\n\n4 3 2\n  # another\n2 1 0\n");
    CHECK(serialize(messy) == "3 5 2\n0 1 2\n2 3 4\n");
    CHECK(parse_hypergraph(serialize(messy)) == messy);

    CHECK_THROWS_AS(parse_hypergraph("3 4\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 4 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 4 2\n0 1 2\n2 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 4 1\n0 1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 4 2\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 4 1\n0 1 2\n"), ParseError);
  }

  TEST_CASE("serialize round trip on random structures") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Hypergraph h = fixtures::random_hypergraph(4, 12, 20, seed);
      CHECK(parse_hypergraph(serialize(h)) == h);
      Graph g = fixtures::random_graph(12, 300, seed);
      CHECK(parse_graph(serialize(g)) == g);
    }
  }

  TEST_CASE("bipartition validity") {
    Graph c6 = cycle_graph(6);
    CHECK(is_valid_bipartition(c6, {{0, 2, 4}, {1, 3, 5}}));
    CHECK_FALSE(is_valid_bipartition(c6, {{0, 1, 2}, {3, 4, 5}}));
    CHECK_FALSE(is_valid_bipartition(c6, {{0, 2}, {1, 3, 5}}));
  }
}
