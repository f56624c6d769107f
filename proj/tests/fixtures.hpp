#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"
#include "berge/rng.hpp"

namespace fixtures {

using berge::Graph;
using berge::GraphEdge;
using berge::Hypergraph;
using berge::VertexId;

inline Hypergraph fano() {
  return Hypergraph(3, 7,
                    {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

// Lines of the affine plane over Z_3; point (x, y) is 3x + y.
inline Hypergraph affine_plane3() {
  std::set<std::vector<VertexId>> lines;
  const int directions[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  for (auto [dx, dy] : directions) {
    for (int x = 0; x < 3; ++x) {
      for (int y = 0; y < 3; ++y) {
        std::vector<VertexId> line;
        for (int t = 0; t < 3; ++t) {
          line.push_back(static_cast<VertexId>(3 * ((x + t * dx) % 3) + (y + t * dy) % 3));
        }
        std::sort(line.begin(), line.end());
        lines.insert(line);
      }
    }
  }
  return Hypergraph(3, 9, {lines.begin(), lines.end()});
}

inline Hypergraph loose_triangle() { return Hypergraph(3, 6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}}); }

inline Hypergraph sunflower() { return Hypergraph(3, 7, {{0, 1, 6}, {1, 2, 6}, {2, 0, 6}}); }

// Loose k-cycle on 2k vertices: edges {2i, 2i+1, 2i+2 mod 2k}.
inline Hypergraph loose_cycle(std::size_t k) {
  std::vector<std::vector<VertexId>> edges;
  const auto n = static_cast<VertexId>(2 * k);
  for (VertexId i = 0; i < k; ++i) edges.push_back({2 * i, 2 * i + 1, (2 * i + 2) % n});
  return Hypergraph(3, n, edges);
}

// Tight path v_0..v_{k+1} with edges {v_i, v_{i+1}, v_{i+2}}.
inline Hypergraph tight_path(std::size_t k) {
  std::vector<std::vector<VertexId>> edges;
  for (VertexId i = 0; i < k; ++i) edges.push_back({i, i + 1, i + 2});
  return Hypergraph(3, k + 2, edges);
}

inline Hypergraph random_hypergraph(std::size_t r, std::size_t n, std::size_t edges,
                                    std::uint64_t seed) {
  berge::Rng rng(seed);
  std::set<std::vector<VertexId>> chosen;
  std::size_t attempts = 0;
  while (chosen.size() < edges && attempts++ < 100 * (edges + 1)) {
    std::vector<VertexId> pool(n);
    for (VertexId v = 0; v < n; ++v) pool[v] = v;
    rng.partial_shuffle(pool, r);
    std::vector<VertexId> e(pool.begin(), pool.begin() + static_cast<long>(r));
    std::sort(e.begin(), e.end());
    chosen.insert(e);
  }
  return Hypergraph(r, n, {chosen.begin(), chosen.end()});
}

// G(n, p) with p = num / 1000.
inline Graph random_graph(std::size_t n, unsigned num, std::uint64_t seed) {
  berge::Rng rng(seed);
  std::vector<GraphEdge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.below(1000) < num) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

}  // namespace fixtures
