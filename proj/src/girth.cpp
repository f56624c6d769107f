#include "berge/girth.hpp"

#include <algorithm>
#include <queue>

namespace berge {

GirthReport girth(const Graph& g) {
  const std::size_t n = g.num_vertices();
  GirthReport report;
  std::vector<std::size_t> dist(n);
  std::vector<VertexId> parent(n);
  std::size_t best = kInfiniteGirth;
  VertexId best_root = 0, best_u = 0, best_w = 0;

  for (VertexId root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kInfiniteGirth);
    dist[root] = 0;
    parent[root] = kNoVertex;
    std::queue<VertexId> queue;
    queue.push(root);
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop();
      // No cycle through this root can beat `best` once 2*dist(u)+1 >= best.
      if (best != kInfiniteGirth && 2 * dist[u] + 1 >= best) break;
      for (VertexId w : g.neighbors(u)) {
        if (dist[w] == kInfiniteGirth) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push(w);
        } else if (w != parent[u]) {
          const std::size_t len = dist[u] + dist[w] + 1;
          if (len < best) {
            best = len;
            best_root = root;
            best_u = u;
            best_w = w;
          }
        }
      }
    }
  }

  report.girth = best;
  if (best == kInfiniteGirth) return report;

  // Rebuild the BFS tree at the winning root to recover both branches.
  std::fill(dist.begin(), dist.end(), kInfiniteGirth);
  dist[best_root] = 0;
  parent[best_root] = kNoVertex;
  std::queue<VertexId> queue;
  queue.push(best_root);
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop();
    for (VertexId w : g.neighbors(u)) {
      if (dist[w] == kInfiniteGirth) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push(w);
      }
    }
  }
  std::vector<VertexId> left, right;
  for (VertexId x = best_u; x != kNoVertex; x = parent[x]) left.push_back(x);
  for (VertexId x = best_w; x != kNoVertex; x = parent[x]) right.push_back(x);
  // left ends at root; right ends at root. Cycle: root..u (reversed left),
  // then w..(child of root) along right.
  std::vector<VertexId> cycle(left.rbegin(), left.rend());
  for (std::size_t i = 0; i + 1 < right.size(); ++i) cycle.push_back(right[i]);
  report.shortest_cycle = std::move(cycle);
  return report;
}

std::size_t bounded_distance(const Graph& g, VertexId from, VertexId to, std::size_t limit) {
  if (from == to) return 0;
  std::vector<std::size_t> dist(g.num_vertices(), kInfiniteGirth);
  std::vector<VertexId> frontier{from}, next;
  dist[from] = 0;
  for (std::size_t d = 1; d <= limit && !frontier.empty(); ++d) {
    next.clear();
    for (VertexId u : frontier) {
      for (VertexId w : g.neighbors(u)) {
        if (dist[w] != kInfiniteGirth) continue;
        if (w == to) return d;
        dist[w] = d;
        next.push_back(w);
      }
    }
    frontier.swap(next);
  }
  return limit + 1;
}

}  // namespace berge
