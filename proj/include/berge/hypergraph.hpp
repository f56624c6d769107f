#pragma once

#include <span>
#include <utility>
#include <vector>

#include "berge/graph.hpp"
#include "berge/types.hpp"

namespace berge {

// r-uniform hypergraph on vertices 0..n-1 with pairwise distinct edges.
//
// Each edge is stored sorted and the edge family is kept in lexicographic
// order, so edge indices and serialization are canonical. Edges live in a
// flat array of r-tuples; `edge(i)` returns a view.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t r, std::size_t n = 0);
  // Throws std::invalid_argument on wrong arity, repeated vertex inside an
  // edge, duplicate edge or vertex id >= n.
  Hypergraph(std::size_t r, std::size_t n, std::vector<std::vector<VertexId>> edges);
  Hypergraph(std::size_t r, std::size_t n, std::vector<std::vector<VertexId>> edges,
             std::vector<VertexId> origin);

  static Hypergraph from_graph(const Graph& g);

  std::size_t uniformity() const { return r_; }
  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return r_ == 0 ? 0 : flat_.size() / r_; }
  bool empty() const { return flat_.empty(); }

  std::span<const VertexId> edge(std::size_t i) const {
    return {flat_.data() + i * r_, r_};
  }
  std::vector<std::vector<VertexId>> edge_list() const;
  std::span<const EdgeId> incident(VertexId v) const { return incidence_[v]; }
  const std::vector<VertexId>& flat_edges() const { return flat_; }
  const std::vector<std::vector<EdgeId>>& incidence_lists() const { return incidence_; }

  // Index of the edge with exactly these vertices (any order), or -1.
  long find_edge(std::span<const VertexId> vertices) const;
  bool contains_edge(std::span<const VertexId> vertices) const {
    return find_edge(vertices) >= 0;
  }

  // d_H(v). Throws std::out_of_range.
  std::size_t degree(VertexId v) const;
  // |{w : uvw in H}| for 3-graphs. Throws std::invalid_argument when u == v
  // or r != 3, std::out_of_range for bad ids.
  std::size_t codegree(VertexId u, VertexId v) const;
  // Number of edges containing both u and v; any r.
  std::size_t pair_degree(VertexId u, VertexId v) const;

  double average_degree() const;
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  // Relabelled hypergraph on `vertices` containing exactly the edges of H
  // inside that set. Vertex i of the result is vertices[i]; origin ids are
  // composed.
  Hypergraph induced(std::span<const VertexId> vertices) const;
  // Same vertex set, only the listed edges (ids into this hypergraph).
  Hypergraph edge_subgraph(std::span<const EdgeId> edge_ids) const;

  VertexId origin(VertexId v) const { return origin_[v]; }
  const std::vector<VertexId>& origin_map() const { return origin_; }

  // True iff no edge lies entirely inside `vertices`.
  bool is_independent(std::span<const VertexId> vertices) const;

  bool operator==(const Hypergraph& other) const {
    return r_ == other.r_ && n_ == other.n_ && flat_ == other.flat_;
  }

 private:
  void build(std::vector<std::vector<VertexId>> edges);

  std::size_t r_ = 0;
  std::size_t n_ = 0;
  std::vector<VertexId> flat_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::vector<VertexId> origin_;
};

}  // namespace berge
