#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

struct CutResult {
  Bipartition parts;  // over all vertices of the input graph
  Graph crossing;     // same vertex set, crossing edges only
};

// Local-search max cut. The first restart starts from a BFS layering
// (so bipartite inputs keep every edge); further restarts start from
// seeded random sides. Each restart flips vertices while that increases the
// cut, so every vertex ends with at least half its edges crossing.
CutResult max_cut_bipartite(const Graph& g, std::uint64_t seed, std::size_t iterations = 8);

// Largest induced subgraph with minimum degree > threshold (core peeling).
// The result is relabelled; origin ids point back into g.
Graph peel_min_degree(const Graph& g, double threshold);

struct DegPipelineReport {
  std::size_t k = 0;
  std::size_t n = 0;                  // vertices of the input graph
  std::size_t input_edges = 0;
  double c = 0;                       // |E| / (2 n^{1+1/k})
  double threshold = 0;               // c n^{1/k}
  std::size_t cut_edges = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t survivors = 0;
  double max_degree_bound = 0;        // n^{1/k} / c^{k-1}
  double size_bound = 0;              // c^k n
  bool min_degree_ok = false;
  bool max_degree_ok = false;         // warning only when false
  bool size_ok = false;
  bool k_below_three = false;   // k < 3: the degree bound is proven only for k >= 3
  std::vector<std::string> warnings;
};

struct DegPipelineResult {
  Graph graph;             // G', relabelled; origin ids refer to the input
  Bipartition parts;       // bipartition of G' in its own ids
  DegPipelineReport report;
};

// Max cut, then peel at c n^{1/k}. Throws std::invalid_argument when the
// girth is at most 2k, k < 2, or nothing survives the peel.
DegPipelineResult deg_pipeline(const Graph& g, std::size_t k, std::uint64_t seed,
                               std::size_t cut_iterations = 8);

}  // namespace berge
