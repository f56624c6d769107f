#include "berge/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace berge {

Hypergraph::Hypergraph(std::size_t r, std::size_t n) : Hypergraph(r, n, {}) {}

Hypergraph::Hypergraph(std::size_t r, std::size_t n, std::vector<std::vector<VertexId>> edges)
    : Hypergraph(r, n, std::move(edges), {}) {}

Hypergraph::Hypergraph(std::size_t r, std::size_t n, std::vector<std::vector<VertexId>> edges,
                       std::vector<VertexId> origin)
    : r_(r), n_(n), origin_(std::move(origin)) {
  if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
  if (origin_.empty()) {
    origin_.resize(n);
    std::iota(origin_.begin(), origin_.end(), VertexId{0});
  } else if (origin_.size() != n) {
    throw std::invalid_argument("origin map size does not match vertex count");
  }
  build(std::move(edges));
}

void Hypergraph::build(std::vector<std::vector<VertexId>> edges) {
  for (auto& e : edges) {
    if (e.size() != r_) {
      throw std::invalid_argument("edge has " + std::to_string(e.size()) + " vertices, expected " +
                                  std::to_string(r_));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw std::invalid_argument("edge repeats a vertex");
    }
    if (e.back() >= n_) {
      throw std::invalid_argument("vertex id " + std::to_string(e.back()) + " out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  flat_.clear();
  flat_.reserve(edges.size() * r_);
  incidence_.assign(n_, {});
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (VertexId v : edges[i]) {
      flat_.push_back(v);
      incidence_[v].push_back(static_cast<EdgeId>(i));
    }
  }
}

Hypergraph Hypergraph::from_graph(const Graph& g) {
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(g.num_edges());
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Hypergraph(2, g.num_vertices(), std::move(edges), g.origin_map());
}

std::vector<std::vector<VertexId>> Hypergraph::edge_list() const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(num_edges());
  for (std::size_t i = 0; i < num_edges(); ++i) {
    auto e = edge(i);
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

long Hypergraph::find_edge(std::span<const VertexId> vertices) const {
  if (vertices.size() != r_) return -1;
  std::vector<VertexId> key(vertices.begin(), vertices.end());
  std::sort(key.begin(), key.end());
  if (key.back() >= n_) return -1;
  for (EdgeId id : incidence_[key.front()]) {
    auto e = edge(id);
    if (std::equal(e.begin(), e.end(), key.begin())) return static_cast<long>(id);
  }
  return -1;
}

std::size_t Hypergraph::degree(VertexId v) const {
  if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return incidence_[v].size();
}

std::size_t Hypergraph::pair_degree(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  const auto& small = incidence_[u].size() <= incidence_[v].size() ? incidence_[u] : incidence_[v];
  const VertexId other = incidence_[u].size() <= incidence_[v].size() ? v : u;
  std::size_t count = 0;
  for (EdgeId id : small) {
    auto e = edge(id);
    if (std::binary_search(e.begin(), e.end(), other)) ++count;
  }
  return count;
}

std::size_t Hypergraph::codegree(VertexId u, VertexId v) const {
  if (r_ != 3) throw std::invalid_argument("codegree is defined for 3-graphs only");
  if (u == v) throw std::invalid_argument("codegree needs two distinct vertices");
  return pair_degree(u, v);
}

double Hypergraph::average_degree() const {
  return n_ == 0 ? 0.0
                 : static_cast<double>(r_) * static_cast<double>(num_edges()) /
                       static_cast<double>(n_);
}

std::size_t Hypergraph::min_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) {
    if (v == 0 || incidence_[v].size() < best) best = incidence_[v].size();
  }
  return best;
}

std::size_t Hypergraph::max_degree() const {
  std::size_t best = 0;
  for (const auto& inc : incidence_) best = std::max(best, inc.size());
  return best;
}

Hypergraph Hypergraph::induced(std::span<const VertexId> vertices) const {
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
  std::vector<std::vector<VertexId>> kept;
  for (std::size_t i = 0; i < num_edges(); ++i) {
    auto e = edge(i);
    if (std::all_of(e.begin(), e.end(), [&](VertexId v) { return local[v] != kNoVertex; })) {
      std::vector<VertexId> mapped;
      for (VertexId v : e) mapped.push_back(local[v]);
      kept.push_back(std::move(mapped));
    }
  }
  return Hypergraph(r_, vertices.size(), std::move(kept), std::move(origin));
}

Hypergraph Hypergraph::edge_subgraph(std::span<const EdgeId> edge_ids) const {
  std::vector<std::vector<VertexId>> kept;
  kept.reserve(edge_ids.size());
  for (EdgeId id : edge_ids) {
    if (id >= num_edges()) throw std::out_of_range("edge id out of range");
    auto e = edge(id);
    kept.emplace_back(e.begin(), e.end());
  }
  return Hypergraph(r_, n_, std::move(kept), origin_);
}

bool Hypergraph::is_independent(std::span<const VertexId> vertices) const {
  std::vector<char> in(n_, 0);
  for (VertexId v : vertices) {
    if (v >= n_) throw std::out_of_range("vertex out of range");
    in[v] = 1;
  }
  for (std::size_t i = 0; i < num_edges(); ++i) {
    auto e = edge(i);
    if (std::all_of(e.begin(), e.end(), [&](VertexId v) { return in[v] != 0; })) return false;
  }
  return true;
}

}  // namespace berge
