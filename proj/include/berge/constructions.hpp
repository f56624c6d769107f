#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

struct StarSystemSpec {
  std::size_t r = 3;
  std::size_t d = 0;  // vertices
  std::size_t m = 1;  // stars
};

struct StarSystem {
  Hypergraph graph;
  // Vertex classes as contiguous [begin, end) ranges; center = begin.
  std::vector<std::pair<VertexId, VertexId>> classes;
  std::size_t undersized_classes = 0;  // classes with fewer than r vertices
};

// Canonical S_{d,m}: [d] split into m contiguous classes whose sizes differ
// by at most one (larger classes first); each class carries the star of all
// r-sets containing its least vertex. Throws std::invalid_argument when
// m < 1, d < m or r < 2.
StarSystem star_system(const StarSystemSpec& spec);

// exp(-m(s - rm)/(2d)), clamped to 1 when s <= rm.
double indep_prob_bound_star(std::size_t d, std::size_t m, std::size_t r, std::size_t s);

struct ProbBound {
  double value = 1;
  bool qualitative = false;  // n below the regime where the bound is claimed
};

inline constexpr std::size_t kJnLargeN = 10'000;

// For s < sqrt(n)/2: exp(-(s^3 - 216)/(80 n^{3/2})) clamped to 1;
// otherwise 639/640.
ProbBound indep_prob_bound_jn(std::size_t n, std::size_t s);

// Placement of one local structure onto N(x).
struct Placement {
  VertexId x = 0;                  // vertex of the source graph
  std::vector<VertexId> image;     // image[i] = H-vertex receiving local vertex i
  std::size_t m_used = 0;          // stars actually used (t2), 0 for t3
  bool clamped = false;            // m reduced to d(x)
  std::uint64_t local_seed = 0;    // J-supplier seed (t3)
  std::size_t local_edges = 0;
};

struct ConstructionTrace {
  std::string kind;                // "t2" or "t3"
  Graph source;                    // G'
  Bipartition parts;               // parts of G' as given
  std::vector<VertexId> x_side;    // X (the smaller part; ties -> left)
  std::vector<VertexId> y_side;    // Y; H-vertex i is y_side[i]
  std::size_t k = 0;
  std::size_t r = 3;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  double c = 0;                    // density constant of the host graph, if known
  std::size_t host_vertices = 0;   // n of the host graph, if known
  std::vector<Placement> placements;
  Hypergraph hypergraph;
  std::vector<std::string> flags;
};

// m = ceil(8 ln n / c^k), at least 1.
std::size_t default_star_count(std::size_t n, double c, std::size_t k);

// Random star placement over a bipartite graph of girth > 2k. Per-x
// Fisher-Yates bijections come from independent streams split off `seed`.
// Throws std::invalid_argument on a girth violation, m == 0 or an invalid
// bipartition.
ConstructionTrace build_theorem2(const Graph& source, const Bipartition& parts, std::size_t k,
                                 std::size_t r, std::size_t m, std::uint64_t seed);

// Random J_{d(x)} placement over a bipartite graph of girth > 8.
ConstructionTrace build_theorem3(const Graph& source, const Bipartition& parts,
                                 std::uint64_t seed);

// Rebuilds from the trace's inputs and seed; true iff the hypergraph is
// reproduced edge for edge.
bool replay_matches(const ConstructionTrace& trace);

struct JnReport {
  Hypergraph graph;
  std::size_t max_degree_cap = 0;  // ceil(sqrt(n))
  double target_edges = 0;         // n^{3/2} / 10
  std::size_t candidates_scanned = 0;
};

// Greedy linear {B_2, B_3, B_4}-free 3-graph with max degree <= ceil(sqrt n).
// Candidate triples are scanned in seeded random order; each accepted triple
// is checked locally by the Berge cycle search through the new edge.
JnReport jn_supplier(std::size_t n, std::uint64_t seed);

}  // namespace berge
