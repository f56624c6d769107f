#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berge/berge_cycle.hpp"
#include "berge/census.hpp"
#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

using VertexPair = std::pair<VertexId, VertexId>;  // first < second

// Keep each vertex with probability p = max(d, 1)^{-1/2} (d = average degree),
// then drop one vertex from every surviving edge. Always independent.
// Throws std::invalid_argument unless `h` is 3-uniform.
std::vector<VertexId> random_indep_set(const Hypergraph& h, std::uint64_t seed);

struct PeelReport {
  double epsilon = 0;
  std::size_t input_vertices = 0;
  std::size_t input_edges = 0;
  std::size_t stages = 0;
  std::size_t n0 = 0;         // vertices kept
  std::size_t edges0 = 0;
  double d0 = 0;              // average degree of the kept subgraph
  std::size_t max_degree0 = 0;
  double size_bound = 0;      // n^{1 - 2 / log2(1 / epsilon)}
  bool size_ok = false;       // n0 >= size_bound
  bool ratio_ok = false;      // max_degree0 <= d0 / epsilon
};

struct BoundedRatioResult {
  Hypergraph graph;               // relabelled; origin ids refer to the input
  std::vector<VertexId> kept;     // input ids, ascending
  PeelReport report;
};

// Repeatedly removes every vertex whose degree is at least the average at
// the start of the stage, until the max/average ratio is at most 1/epsilon.
// Throws std::invalid_argument unless 0 < epsilon < 1/2.
BoundedRatioResult bounded_ratio_subgraph(const Hypergraph& h, double epsilon);

struct LightLayer {
  std::vector<EdgeId> edges;             // ids in the input hypergraph
  std::vector<VertexPair> light_pairs;   // per edge, a pair with residual codegree < k
};

struct LightPairTrace {
  std::size_t k = 0;
  std::vector<LightLayer> layers;                 // H_1 .. H_{k-1}
  std::vector<EdgeId> leftover;                   // G_k
  std::optional<std::vector<VertexId>> tight_path;  // k + 2 vertices when G_k is nonempty
};

// Peels k-1 layers of edges owning a light pair. When edges survive, walks
// back through the residual graphs to build a tight path of length k.
// Throws std::invalid_argument unless `h` is 3-uniform and k >= 2.
LightPairTrace light_pair_peel(const Hypergraph& h, std::size_t k);

struct HeavyResult {
  std::optional<std::vector<VertexId>> tight_path;
  Hypergraph subgraph;                     // H*, same vertex set as the input
  std::vector<EdgeId> source_edges;        // per subgraph edge, its input id
  std::vector<VertexPair> designated_pairs;  // per subgraph edge, codegree 1 in H*
  std::size_t chosen_layer = 0;            // 1-based, 0 when no layer was used
  std::size_t layer_edges = 0;
  std::size_t conflict_max_degree = 0;
  std::size_t conflict_bound = 0;          // 3k - 6
  double size_bound = 0;                   // |H| / (3k^2)
};

// Largest light layer, thinned so each kept edge owns a codegree-1 pair.
// The conflict-degree and size guarantees are checked on every call and a
// violation raises std::logic_error. Requires k >= 3.
HeavyResult heavy_subgraph(const Hypergraph& h, std::size_t k);

struct ColorSplit {
  std::vector<int> coloring;         // per vertex, 1..3
  std::vector<EdgeId> kept_edges;    // H_2 as ids of the input
  Graph link;                        // pairs coloured {1, 2}, same vertex set
  std::vector<VertexId> apex;        // per link edge, its colour-3 vertex
  std::vector<EdgeId> link_source;   // per link edge, its input edge id
  double ratio = 0;                  // |H_2| / |H_1|, 0 for empty input
  bool meets_expectation = false;    // |H_2| >= |H_1| / 27
  std::size_t tries = 0;
};

// Best of `tries` random 3-colourings. An edge survives when it is rainbow
// and its colour-{1,2} pair has codegree 1 in `h`.
ColorSplit color_split(const Hypergraph& h, std::uint64_t seed, std::size_t tries = 64);

// Applies one given colouring (values 1..3, one per vertex) with the same
// survival rule. Throws std::invalid_argument on a malformed colouring.
ColorSplit color_split_fixed(const Hypergraph& h, std::vector<int> coloring);

struct ApexDiagnostic {
  GraphEdge edge;                  // the link edge with the most cycles
  std::uint64_t cycles = 0;
  std::size_t union_edges = 0;
  VertexId apex = kNoVertex;       // input id
  std::size_t apex_degree = 0;     // degree of the apex in H_2
  std::size_t max_degree0 = 0;
  bool exceeds_max_degree = false;  // union_edges > max_degree0
};

struct CaseOneResult {
  std::uint64_t total_cycles = 0;           // 2k-cycles in the link graph
  std::optional<BergeWitness> witness;      // edge ids of the split hypergraph
  std::optional<ApexDiagnostic> diagnostic; // set when cycles exist but no witness
};

// Dense-link branch: takes the link edge on the most 2k-cycles and walks every
// cycle through it. A cycle whose apexes are not all equal lifts to a
// non-trivial Berge 2k-cycle; otherwise the shared apex is reported. Vertex
// and edge ids refer to `h`, the hypergraph the split was taken from.
// `max_degree0` feeds the diagnostic. Throws BudgetExceeded from the census.
CaseOneResult case_one_search(const Hypergraph& h, const ColorSplit& split, std::size_t k,
                              std::size_t max_degree0,
                              std::uint64_t budget = kDefaultCensusBudget);

struct PipelineOptions {
  std::optional<double> epsilon;
  std::size_t color_tries = 64;
  std::size_t indep_tries = 32;
  std::uint64_t census_budget = 100'000'000;
};

struct PipelineReport {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t edges = 0;
  PeelReport peel;
  std::size_t heavy_edges = 0;
  double heavy_bound = 0;           // |H_0| / (3 (2k)^2), guaranteed
  bool heavy_meets_4k2 = false;     // |H_1| >= |H_0| / (4k^2), reported only
  std::size_t split_edges = 0;
  double split_ratio = 0;
  bool split_meets_expectation = false;
  double b = 0;                     // |G| / n0^{1+1/k}
  std::size_t link_edges = 0;
  int case_taken = 2;               // 1 or 2, 0 when a tight path ends the run
  std::string outcome;              // independent_set | tight_path | witness | apex_diagnostic
  std::optional<BergeWitness> witness;  // edge ids of the input
  std::optional<ApexDiagnostic> apex;
  std::vector<VertexId> independent_set;  // input ids
  double alpha_floor = 0;           // 2 n0 / (3 sqrt(max(d0, 1)))
  std::vector<std::string> notes;
};

// Runs the full peeling argument on a 3-graph. The returned independent set
// is verified against `h` in every case. Requires k >= 2.
PipelineReport theorem1_pipeline(const Hypergraph& h, std::size_t k, std::uint64_t seed,
                                 const PipelineOptions& options = {});

}  // namespace berge
