#include "berge/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace berge {

Graph::Graph(std::size_t n, std::vector<GraphEdge> edges)
    : Graph(n, std::move(edges), {}) {}

Graph::Graph(std::size_t n, std::vector<GraphEdge> edges, std::vector<VertexId> origin)
    : n_(n), edges_(std::move(edges)), adjacency_(n), origin_(std::move(origin)) {
  if (origin_.empty()) {
    origin_.resize(n);
    std::iota(origin_.begin(), origin_.end(), VertexId{0});
  } else if (origin_.size() != n) {
    throw std::invalid_argument("origin map size does not match vertex count");
  }
  for (auto& [u, v] : edges_) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(std::max(u, v)));
    }
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  for (const auto& [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

long Graph::edge_index(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), GraphEdge{u, v});
  if (it == edges_.end() || *it != GraphEdge{u, v}) return -1;
  return static_cast<long>(it - edges_.begin());
}

std::size_t Graph::min_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) {
    if (v == 0 || adjacency_[v].size() < best) best = adjacency_[v].size();
  }
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, nb.size());
  return best;
}

double Graph::average_degree() const {
  return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(edges_.size()) / static_cast<double>(n_);
}

Graph Graph::induced(std::span<const VertexId> vertices) const {
  std::vector<VertexId> local(n_, kNoVertex);
  std::vector<VertexId> origin;
  origin.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const VertexId v = vertices[i];
    if (v >= n_) throw std::invalid_argument("induced: vertex out of range");
    if (local[v] != kNoVertex) throw std::invalid_argument("induced: repeated vertex");
    local[v] = static_cast<VertexId>(i);
    origin.push_back(origin_[v]);
  }
  std::vector<GraphEdge> kept;
  for (const auto& [u, v] : edges_) {
    if (local[u] != kNoVertex && local[v] != kNoVertex) kept.emplace_back(local[u], local[v]);
  }
  return Graph(vertices.size(), std::move(kept), std::move(origin));
}

bool is_valid_bipartition(const Graph& g, const Bipartition& parts) {
  std::vector<int> side(g.num_vertices(), -1);
  for (VertexId v : parts.left) {
    if (v >= g.num_vertices() || side[v] != -1) return false;
    side[v] = 0;
  }
  for (VertexId v : parts.right) {
    if (v >= g.num_vertices() || side[v] != -1) return false;
    side[v] = 1;
  }
  if (std::find(side.begin(), side.end(), -1) != side.end()) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const GraphEdge& e) { return side[e.first] != side[e.second]; });
}

Graph cycle_graph(std::size_t n) {
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
  }
  return Graph(n, std::move(edges));
}

Graph path_graph(std::size_t n) {
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
  }
  return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<GraphEdge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

}  // namespace berge
