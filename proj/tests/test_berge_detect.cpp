#include <doctest.h>

#include <set>

#include "berge/berge_cycle.hpp"
#include "berge/sdr.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

BergeWitness plain(std::vector<EdgeId> edges, std::vector<VertexId> reps) {
  BergeWitness w;
  w.edge_ids = std::move(edges);
  w.sdr = std::move(reps);
  return w;
}

std::vector<EdgeId> ids_of(const Hypergraph& h, std::vector<std::vector<VertexId>> edges) {
  std::vector<EdgeId> out;
  for (auto& e : edges) out.push_back(static_cast<EdgeId>(h.find_edge(e)));
  return out;
}

}  // namespace

TEST_SUITE("berge-detect") {
  TEST_CASE("sdr basics") {
    std::vector<std::vector<VertexId>> singles{{1}, {2}, {3}};
    CHECK(sdr(singles) == std::vector<VertexId>{1, 2, 3});
    std::vector<std::vector<VertexId>> clash{{1}, {1}};
    CHECK_FALSE(sdr(clash).has_value());
    std::vector<std::vector<VertexId>> triangle{{1, 2}, {2, 3}, {1, 3}};
    auto first = sdr(triangle);
    REQUIRE(first.has_value());
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(std::count(triangle[i].begin(), triangle[i].end(), (*first)[i]) == 1);
    }
    CHECK(std::set<VertexId>(first->begin(), first->end()).size() == 3);
    CHECK(sdr(triangle) == first);
  }

  TEST_CASE("sdr agrees with brute force") {
    Rng rng(7);
    for (int round = 0; round < 300; ++round) {
      std::vector<std::vector<VertexId>> sets(1 + rng.below(5));
      for (auto& s : sets) {
        for (VertexId v = 0; v < 6; ++v) {
          if (rng.below(3) == 0) s.push_back(v);
        }
      }
      auto got = sdr(sets);
      CHECK(got.has_value() == oracle::has_sdr(sets));
      if (got) {
        for (std::size_t i = 0; i < sets.size(); ++i) {
          CHECK(std::find(sets[i].begin(), sets[i].end(), (*got)[i]) != sets[i].end());
        }
      }
    }
  }

  TEST_CASE("incremental matcher rolls back failed pushes") {
    SdrMatcher m(4);
    CHECK(m.push({0}));
    CHECK(m.push({0, 1}));
    CHECK_FALSE(m.push({0, 1}));
    CHECK(m.size() == 2);
    CHECK(m.push({1, 2}));
    m.pop();
    m.pop();
    CHECK(m.push({0, 1}));
  }

  TEST_CASE("verify_witness examples") {
    Hypergraph loose = fixtures::loose_triangle();
    auto ids = ids_of(loose, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
    BergeWitness w = plain(ids, {2, 4, 0});
    CHECK(verify_witness(loose, w, CycleMode::trivial_allowed));
    CHECK(verify_witness(loose, w, CycleMode::nontrivial));

    Hypergraph sun = fixtures::sunflower();
    auto sun_ids = ids_of(sun, {{0, 1, 6}, {1, 2, 6}, {0, 2, 6}});
    BergeWitness s = plain(sun_ids, {1, 2, 0});
    CHECK(verify_witness(sun, s, CycleMode::trivial_allowed));
    CHECK_FALSE(verify_witness(sun, s, CycleMode::nontrivial));

    BergeWitness repeated = plain({ids[0], ids[0], ids[1]}, {2, 4, 0});
    CHECK_FALSE(verify_witness(loose, repeated, CycleMode::trivial_allowed));
    CHECK_THROWS_AS(verify_witness(loose, plain({0, 1, 9}, {2, 4, 0}), CycleMode::nontrivial),
                    std::out_of_range);
  }

  TEST_CASE("forged nontrivial evidence is rejected") {
    Hypergraph sun = fixtures::sunflower();
    auto sun_ids = ids_of(sun, {{0, 1, 6}, {1, 2, 6}, {0, 2, 6}});
    BergeWitness s = plain(sun_ids, {1, 2, 0});
    s.nontrivial = true;
    s.exclusions = {{0, sun_ids[1]}, {1, sun_ids[2]}, {6, sun_ids[0]}};
    CHECK_FALSE(verify_witness(sun, s, CycleMode::trivial_allowed));
  }

  TEST_CASE("find_berge_cycle examples") {
    auto loose = find_berge_cycle(fixtures::loose_triangle(), 3, CycleMode::nontrivial);
    CHECK(loose.status == SearchStatus::found);
    auto sun_nt = find_berge_cycle(fixtures::sunflower(), 3, CycleMode::nontrivial);
    CHECK(sun_nt.status == SearchStatus::absent);
    auto sun_tr = find_berge_cycle(fixtures::sunflower(), 3, CycleMode::trivial_allowed);
    CHECK(sun_tr.status == SearchStatus::found);
    auto fano = find_berge_cycle(fixtures::fano(), 3, CycleMode::nontrivial);
    REQUIRE(fano.status == SearchStatus::found);
    CHECK(verify_witness(fixtures::fano(), *fano.witness, CycleMode::nontrivial));
    CHECK(fano.witness->nontrivial);
  }

  TEST_CASE("two-cycles follow the literal definition") {
    Hypergraph share_two(3, 4, {{0, 1, 2}, {0, 1, 3}});
    CHECK(find_berge_cycle(share_two, 2, CycleMode::trivial_allowed).status == SearchStatus::found);
    CHECK(find_berge_cycle(share_two, 2, CycleMode::nontrivial).status == SearchStatus::absent);
    Hypergraph share_one(3, 5, {{0, 1, 2}, {0, 3, 4}});
    CHECK(find_berge_cycle(share_one, 2, CycleMode::trivial_allowed).status == SearchStatus::absent);
  }

  TEST_CASE("loose cycles are non-trivial Berge cycles") {
    for (std::size_t k = 3; k <= 7; ++k) {
      Hypergraph h = fixtures::loose_cycle(k);
      auto found = find_berge_cycle(h, k, CycleMode::nontrivial);
      CHECK(found.status == SearchStatus::found);
      CHECK(find_berge_cycle(h, k - 1, CycleMode::trivial_allowed).status == SearchStatus::absent);
    }
  }

  TEST_CASE("detector matches the tuple oracle on random small 3-graphs") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
      Rng pick(seed * 31 + 5);
      const std::size_t n = 4 + pick.below(4);
      const std::size_t m = 1 + pick.below(6);
      Hypergraph h = fixtures::random_hypergraph(3, n, m, seed);
      for (std::size_t k = 2; k <= 4; ++k) {
        for (CycleMode mode : {CycleMode::trivial_allowed, CycleMode::nontrivial}) {
          auto got = find_berge_cycle(h, k, mode);
          const bool expected = oracle::has_berge_cycle(h, k, mode == CycleMode::nontrivial);
          CHECK((got.status == SearchStatus::found) == expected);
          if (got.witness) CHECK(verify_witness(h, *got.witness, mode));
        }
      }
    }
  }

  TEST_CASE("freeness is monotone under edge deletion") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      Hypergraph h = fixtures::random_hypergraph(3, 9, 6, seed);
      ForbiddenFamily fam{3, {3, 4}, CycleMode::nontrivial};
      if (!is_free(h, fam).is_free()) continue;
      for (EdgeId drop = 0; drop < h.num_edges(); ++drop) {
        std::vector<EdgeId> keep;
        for (EdgeId e = 0; e < h.num_edges(); ++e) {
          if (e != drop) keep.push_back(e);
        }
        CHECK(is_free(h.edge_subgraph(keep), fam).is_free());
      }
    }
  }

  TEST_CASE("is_free composes lengths and handles the empty hypergraph") {
    CHECK(is_free(Hypergraph(3, 5), {3, {2, 3, 4}, CycleMode::nontrivial}).is_free());
    auto loose = is_free(fixtures::loose_triangle(), {3, {3}, CycleMode::nontrivial});
    CHECK_FALSE(loose.is_free());
    CHECK(loose.length == 3);
    REQUIRE(loose.witness.has_value());
  }

  TEST_CASE("budget exhaustion is a distinct outcome") {
    Hypergraph f = fixtures::fano();
    auto limited = find_berge_cycle(f, 7, CycleMode::nontrivial, 3);
    CHECK(limited.status == SearchStatus::budget_exhausted);
    CHECK_FALSE(limited.witness.has_value());
  }

  TEST_CASE("tight path to witness, even length") {
    Hypergraph h = fixtures::tight_path(4);  // v_1..v_6 are 0..5
    std::vector<VertexId> path{0, 1, 2, 3, 4, 5};
    BergeWitness w = tight_path_to_witness(path, h, 4);
    // Edge order e_1, e_2, e_4, e_3 with representatives v_2, v_4, v_5, v_3.
    CHECK(w.edge_ids == ids_of(h, {{0, 1, 2}, {1, 2, 3}, {3, 4, 5}, {2, 3, 4}}));
    CHECK(w.sdr == std::vector<VertexId>{1, 3, 4, 2});
    CHECK(w.nontrivial);
    CHECK(verify_witness(h, w, CycleMode::nontrivial));
  }

  TEST_CASE("tight path to witness, odd length") {
    Hypergraph h3 = fixtures::tight_path(3);
    std::vector<VertexId> path3{0, 1, 2, 3, 4};
    BergeWitness w3 = tight_path_to_witness(path3, h3, 3);
    CHECK(w3.sdr == std::vector<VertexId>{1, 3, 2});
    CHECK(verify_witness(h3, w3, CycleMode::trivial_allowed));
    // All three edges of a length-3 tight path contain v_3.
    CHECK_FALSE(w3.nontrivial);
    CHECK_FALSE(verify_witness(h3, w3, CycleMode::nontrivial));

    for (std::size_t k = 4; k <= 9; ++k) {
      Hypergraph h = fixtures::tight_path(k);
      std::vector<VertexId> path(k + 2);
      std::iota(path.begin(), path.end(), VertexId{0});
      BergeWitness w = tight_path_to_witness(path, h, k);
      CHECK(w.nontrivial);
      CHECK(verify_witness(h, w, CycleMode::nontrivial));
    }
  }

  TEST_CASE("tight path errors") {
    Hypergraph h = fixtures::tight_path(4);
    std::vector<VertexId> repeated{0, 1, 2, 3, 4, 0};
    CHECK_THROWS_AS(tight_path_to_witness(repeated, h, 4), std::invalid_argument);
    std::vector<VertexId> broken{0, 1, 2, 4, 3, 5};
    CHECK_THROWS_AS(tight_path_to_witness(broken, h, 4), std::invalid_argument);
    std::vector<VertexId> short_path{0, 1, 2, 3, 4};
    CHECK_THROWS_AS(tight_path_to_witness(short_path, h, 4), std::invalid_argument);
  }

  TEST_CASE("cycle mode names") {
    CHECK(parse_cycle_mode("nontrivial") == CycleMode::nontrivial);
    CHECK(parse_cycle_mode("trivial") == CycleMode::trivial_allowed);
    CHECK(parse_cycle_mode(to_string(CycleMode::trivial_allowed)) == CycleMode::trivial_allowed);
    CHECK_THROWS_AS(parse_cycle_mode("loose"), std::invalid_argument);
  }
}
