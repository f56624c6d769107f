#pragma once

#include <span>
#include <utility>
#include <vector>

#include "berge/types.hpp"

namespace berge {

using GraphEdge = std::pair<VertexId, VertexId>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
// Edges are stored as (u, v) with u < v in lexicographic order, so edge
// indices are canonical. `origin(v)` maps a vertex back to the id it had in
// the structure this one was derived from (identity for fresh graphs).
class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on loops, duplicates or out-of-range ids.
  Graph(std::size_t n, std::vector<GraphEdge> edges);
  Graph(std::size_t n, std::vector<GraphEdge> edges, std::vector<VertexId> origin);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphEdge& edge(std::size_t i) const { return edges_[i]; }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

  bool has_edge(VertexId u, VertexId v) const;
  // Index of edge {u, v}, or -1 if absent.
  long edge_index(VertexId u, VertexId v) const;

  VertexId origin(VertexId v) const { return origin_[v]; }
  const std::vector<VertexId>& origin_map() const { return origin_; }

  std::size_t min_degree() const;
  std::size_t max_degree() const;
  double average_degree() const;

  // Relabelled subgraph induced on `vertices` (any order, no repeats);
  // origin ids are composed so they still refer to the root structure.
  Graph induced(std::span<const VertexId> vertices) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<VertexId> origin_;
};

// Two-sided vertex partition. Every edge of the host graph crosses.
struct Bipartition {
  std::vector<VertexId> left;
  std::vector<VertexId> right;
};

// True iff left/right are disjoint, cover 0..n-1, and every edge crosses.
bool is_valid_bipartition(const Graph& g, const Bipartition& parts);

// Convenience constructors for test fixtures and examples.
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);

}  // namespace berge
