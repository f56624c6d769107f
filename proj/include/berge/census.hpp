#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

inline constexpr std::uint64_t kDefaultCensusBudget = 100'000'000;

// Cycles are counted as subgraphs: each C_len exactly once.
struct CycleCensus {
  std::size_t length = 0;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> per_edge;  // indexed like g.edges()
  std::uint64_t nodes = 0;
};

// Exact DFS enumeration, canonical representative = smallest vertex first,
// second vertex smaller than the last. Throws std::invalid_argument for
// length < 3 and BudgetExceeded past `budget` DFS nodes.
std::uint64_t count_cycles(const Graph& g, std::size_t length,
                           std::uint64_t budget = kDefaultCensusBudget);
CycleCensus cycle_census(const Graph& g, std::size_t length,
                         std::uint64_t budget = kDefaultCensusBudget);

// Calls `visit(cycle)` for every cycle of the given length through {u, v};
// `cycle` lists the vertices starting u, v, ... (closing back to u).
void for_each_cycle_through_edge(const Graph& g, VertexId u, VertexId v, std::size_t length,
                                 const std::function<void(const std::vector<VertexId>&)>& visit,
                                 std::uint64_t budget = kDefaultCensusBudget,
                                 std::uint64_t* nodes_out = nullptr);

struct EdgeCycles {
  std::uint64_t count = 0;  // m
  Graph union_graph;        // G': same vertex set as g, union of those cycles
  std::uint64_t nodes = 0;
};

// Cycles of the given length through edge {u, v}. Throws
// std::invalid_argument when {u, v} is not an edge.
EdgeCycles cycles_through_edge(const Graph& g, VertexId u, VertexId v, std::size_t length,
                               std::uint64_t budget = kDefaultCensusBudget);

struct BigcpnReport {
  std::size_t k = 0;
  std::uint64_t cycles = 0;        // m, cycles of length 2k through e
  std::size_t union_edges = 0;     // |E(G')|
  double bound = 0;                // m^{1/(k-1)} / 2
  bool holds = false;              // exact: (2|E(G')|)^{k-1} >= m
};

// Edge-count lower bound for the union of all 2k-cycles through one edge.
BigcpnReport bigcpn_check(const Graph& g, VertexId u, VertexId v, std::size_t k,
                          std::uint64_t budget = kDefaultCensusBudget);

struct SupersatReport {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t k = 0;
  double b = 0;               // |E| / n^{1+1/k}
  std::uint64_t count = 0;    // copies of C_{2k}
  double gamma_hat = 0;       // count / (b^{2k} n^2), 0 when b = 0
};

SupersatReport supersat_report(const Graph& g, std::size_t k,
                               std::uint64_t budget = kDefaultCensusBudget);

}  // namespace berge
