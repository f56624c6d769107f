#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "berge/graph.hpp"

namespace berge {

inline constexpr std::size_t kInfiniteGirth = std::numeric_limits<std::size_t>::max();

struct GirthReport {
  std::size_t girth = kInfiniteGirth;  // kInfiniteGirth for forests
  std::optional<std::vector<VertexId>> shortest_cycle;

  bool is_forest() const { return girth == kInfiniteGirth; }
};

// Exact girth by BFS from every vertex; also returns one shortest cycle.
GirthReport girth(const Graph& g);

// Shortest-path distance with early exit beyond `limit` (returns limit + 1).
std::size_t bounded_distance(const Graph& g, VertexId from, VertexId to, std::size_t limit);

}  // namespace berge
