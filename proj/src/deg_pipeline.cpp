#include "berge/deg_pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "berge/girth.hpp"
#include "berge/rng.hpp"

namespace berge {
namespace {

std::size_t cut_size(const Graph& g, const std::vector<char>& side) {
  std::size_t count = 0;
  for (const auto& [u, v] : g.edges()) count += side[u] != side[v];
  return count;
}

void local_search(const Graph& g, std::vector<char>& side) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      std::size_t same = 0;
      for (VertexId w : g.neighbors(v)) same += side[w] == side[v];
      if (2 * same > g.degree(v)) {
        side[v] = static_cast<char>(1 - side[v]);
        improved = true;
      }
    }
  }
}

std::vector<char> bfs_layers(const Graph& g) {
  std::vector<char> side(g.num_vertices(), -1);
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<VertexId> queue;
    queue.push(s);
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop();
      for (VertexId w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = static_cast<char>(1 - side[u]);
          queue.push(w);
        }
      }
    }
  }
  return side;
}

}  // namespace

CutResult max_cut_bipartite(const Graph& g, std::uint64_t seed, std::size_t iterations) {
  std::vector<char> best = bfs_layers(g);
  local_search(g, best);
  std::size_t best_cut = cut_size(g, best);
  for (std::size_t it = 1; it < iterations; ++it) {
    Rng rng(split_seed(seed, it));
    std::vector<char> side(g.num_vertices());
    for (auto& s : side) s = static_cast<char>(rng.below(2));
    local_search(g, side);
    const std::size_t cut = cut_size(g, side);
    if (cut > best_cut) {
      best_cut = cut;
      best = std::move(side);
    }
  }
  CutResult out;
  std::vector<GraphEdge> crossing;
  for (const auto& [u, v] : g.edges()) {
    if (best[u] != best[v]) crossing.emplace_back(u, v);
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    (best[v] == 0 ? out.parts.left : out.parts.right).push_back(v);
  }
  out.crossing = Graph(g.num_vertices(), std::move(crossing), g.origin_map());
  return out;
}

Graph peel_min_degree(const Graph& g, double threshold) {
  if (threshold < 0) throw std::invalid_argument("peel threshold must be nonnegative");
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (static_cast<double>(deg[v]) <= threshold) {
      removed[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (removed[w]) continue;
      if (static_cast<double>(--deg[w]) <= threshold) {
        removed[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < n; ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  return g.induced(keep);
}

DegPipelineResult deg_pipeline(const Graph& g, std::size_t k, std::uint64_t seed,
                               std::size_t cut_iterations) {
  if (k < 2) throw std::invalid_argument("deg pipeline needs k >= 2");
  const GirthReport gr = girth(g);
  if (!gr.is_forest() && gr.girth <= 2 * k) {
    throw std::invalid_argument("girth " + std::to_string(gr.girth) + " is not more than 2k = " +
                                std::to_string(2 * k));
  }
  DegPipelineReport rep;
  rep.k = k;
  rep.n = g.num_vertices();
  rep.input_edges = g.num_edges();
  const double n = static_cast<double>(rep.n);
  const double kd = static_cast<double>(k);
  const double root = std::pow(n, 1.0 / kd);
  rep.c = rep.n == 0 ? 0.0 : static_cast<double>(rep.input_edges) / (2.0 * n * root);
  rep.threshold = rep.c * root;
  rep.k_below_three = k < 3;
  if (rep.k_below_three) {
    rep.warnings.push_back("the degree bound is proven only for k >= 3; k = " + std::to_string(k) +
                           " runs outside that range");
  }

  CutResult cut = max_cut_bipartite(g, seed, cut_iterations);
  rep.cut_edges = cut.crossing.num_edges();
  // Peel on identity-labelled copy so origin ids index into g.
  Graph local_cut(g.num_vertices(), cut.crossing.edges());
  Graph peeled = peel_min_degree(local_cut, rep.threshold);
  if (peeled.num_vertices() == 0) {
    throw std::invalid_argument("no vertex survives the min-degree peel");
  }

  std::vector<char> on_left(g.num_vertices(), 0);
  for (VertexId v : cut.parts.left) on_left[v] = 1;
  Bipartition parts;
  std::vector<VertexId> origin(peeled.num_vertices());
  for (VertexId v = 0; v < peeled.num_vertices(); ++v) {
    const VertexId in_g = peeled.origin(v);
    (on_left[in_g] ? parts.left : parts.right).push_back(v);
    origin[v] = g.origin(in_g);
  }
  Graph core(peeled.num_vertices(), peeled.edges(), std::move(origin));

  rep.survivors = core.num_vertices();
  rep.min_degree = core.min_degree();
  rep.max_degree = core.max_degree();
  rep.max_degree_bound = rep.c > 0 ? root / std::pow(rep.c, kd - 1.0) : INFINITY;
  rep.size_bound = std::pow(rep.c, kd) * n;
  rep.min_degree_ok = static_cast<double>(rep.min_degree) >= rep.threshold;
  rep.max_degree_ok = static_cast<double>(rep.max_degree) <= rep.max_degree_bound;
  rep.size_ok = static_cast<double>(rep.survivors) >= rep.size_bound;
  if (!rep.max_degree_ok) {
    rep.warnings.push_back("max degree exceeds n^{1/k}/c^{k-1} at this size");
  }
  return {std::move(core), std::move(parts), std::move(rep)};
}

}  // namespace berge
