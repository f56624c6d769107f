#include "berge/peel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "berge/rng.hpp"

namespace berge {
namespace {

void require_triple_system(const Hypergraph& h) {
  if (h.uniformity() != 3) throw std::invalid_argument("expected a 3-uniform hypergraph");
}

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::array<VertexPair, 3> pairs_of(std::span<const VertexId> e) {
  return {VertexPair{e[0], e[1]}, VertexPair{e[0], e[2]}, VertexPair{e[1], e[2]}};
}

// Pair codegrees over a subset of the edges of `h`.
std::unordered_map<std::uint64_t, std::size_t> pair_counts(const Hypergraph& h,
                                                           std::span<const EdgeId> edges) {
  std::unordered_map<std::uint64_t, std::size_t> counts;
  counts.reserve(edges.size() * 3);
  for (EdgeId id : edges) {
    for (auto [a, b] : pairs_of(h.edge(id))) ++counts[pair_key(a, b)];
  }
  return counts;
}

}  // namespace

std::vector<VertexId> random_indep_set(const Hypergraph& h, std::uint64_t seed) {
  require_triple_system(h);
  const std::size_t n = h.num_vertices();
  std::vector<VertexId> all(n);
  std::iota(all.begin(), all.end(), VertexId{0});
  if (h.empty()) return all;

  const double p = 1.0 / std::sqrt(std::max(h.average_degree(), 1.0));
  Rng rng(seed);
  std::vector<char> chosen(n, 0);
  for (std::size_t v = 0; v < n; ++v) chosen[v] = rng.uniform() < p;
  // Drop the largest vertex of each edge that is still fully chosen.
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    if (chosen[e[0]] && chosen[e[1]] && chosen[e[2]]) chosen[e[2]] = 0;
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (chosen[v]) out.push_back(v);
  }
  return out;
}

BoundedRatioResult bounded_ratio_subgraph(const Hypergraph& h, double epsilon) {
  require_triple_system(h);
  if (!(epsilon > 0 && epsilon < 0.5)) {
    throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  }
  const std::size_t n = h.num_vertices();
  std::vector<char> alive(n, 1);
  std::vector<char> edge_alive(h.num_edges(), 1);
  std::vector<std::size_t> degree(n);
  for (VertexId v = 0; v < n; ++v) degree[v] = h.degree(v);
  std::size_t live_vertices = n;
  std::size_t live_edges = h.num_edges();

  auto average = [&] {
    return live_vertices == 0 ? 0.0 : 3.0 * static_cast<double>(live_edges) / live_vertices;
  };
  auto maximum = [&] {
    std::size_t best = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (alive[v]) best = std::max(best, degree[v]);
    }
    return best;
  };
  auto remove = [&](VertexId v) {
    alive[v] = 0;
    --live_vertices;
    for (EdgeId id : h.incident(v)) {
      if (!edge_alive[id]) continue;
      edge_alive[id] = 0;
      --live_edges;
      for (VertexId w : h.edge(id)) --degree[w];
    }
  };

  BoundedRatioResult result;
  PeelReport& report = result.report;
  report.epsilon = epsilon;
  report.input_vertices = n;
  report.input_edges = h.num_edges();

  while (static_cast<double>(maximum()) > average() / epsilon) {
    ++report.stages;
    const double stage_average = average();
    bool changed = true;
    while (changed) {
      changed = false;
      for (VertexId v = 0; v < n; ++v) {
        if (alive[v] && static_cast<double>(degree[v]) >= stage_average) {
          remove(v);
          changed = true;
        }
      }
    }
  }

  for (VertexId v = 0; v < n; ++v) {
    if (alive[v]) result.kept.push_back(v);
  }
  result.graph = h.induced(result.kept);
  report.n0 = result.graph.num_vertices();
  report.edges0 = result.graph.num_edges();
  report.d0 = result.graph.average_degree();
  report.max_degree0 = result.graph.max_degree();
  report.size_bound = std::pow(static_cast<double>(n), 1.0 - 2.0 / std::log2(1.0 / epsilon));
  report.size_ok = static_cast<double>(report.n0) >= report.size_bound;
  report.ratio_ok = static_cast<double>(report.max_degree0) <= report.d0 / epsilon;
  return result;
}

LightPairTrace light_pair_peel(const Hypergraph& h, std::size_t k) {
  require_triple_system(h);
  if (k < 2) throw std::invalid_argument("k must be at least 2");

  LightPairTrace trace;
  trace.k = k;
  // layer_of[e] = i when e lands in H_i; k when it survives into G_k.
  std::vector<std::size_t> layer_of(h.num_edges(), k);
  std::vector<EdgeId> residual(h.num_edges());
  std::iota(residual.begin(), residual.end(), EdgeId{0});

  for (std::size_t i = 1; i < k; ++i) {
    auto counts = pair_counts(h, residual);
    LightLayer layer;
    std::vector<EdgeId> next;
    for (EdgeId id : residual) {
      bool light = false;
      for (auto [a, b] : pairs_of(h.edge(id))) {
        if (counts[pair_key(a, b)] < k) {
          layer.edges.push_back(id);
          layer.light_pairs.push_back({a, b});
          light = true;
          break;
        }
      }
      if (light) {
        layer_of[id] = i;
      } else {
        next.push_back(id);
      }
    }
    trace.layers.push_back(std::move(layer));
    residual = std::move(next);
  }
  trace.leftover = residual;
  if (residual.empty()) return trace;

  // e_1 lies in G_k. Step i extends the pair (v_{i+1}, v_{i+2}) by an edge of
  // G_{k-i}, which exists because that pair is heavy there.
  auto e1 = h.edge(residual.front());
  std::vector<VertexId> path(e1.begin(), e1.end());
  for (std::size_t i = 1; i < k; ++i) {
    const VertexId a = path[i];
    const VertexId b = path[i + 1];
    const std::size_t level = k - i;
    VertexId best = kNoVertex;
    for (EdgeId id : h.incident(a)) {
      if (layer_of[id] < level) continue;
      auto e = h.edge(id);
      if (!std::binary_search(e.begin(), e.end(), b)) continue;
      for (VertexId w : e) {
        if (w == a || w == b) continue;
        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
        best = std::min(best, w);
      }
    }
    if (best == kNoVertex) {
      throw std::logic_error("tight path extension failed on a heavy pair");
    }
    path.push_back(best);
  }
  trace.tight_path = std::move(path);
  return trace;
}

HeavyResult heavy_subgraph(const Hypergraph& h, std::size_t k) {
  if (k < 3) throw std::invalid_argument("k must be at least 3");
  LightPairTrace trace = light_pair_peel(h, k);
  HeavyResult result;
  result.conflict_bound = 3 * k - 6;
  result.size_bound = static_cast<double>(h.num_edges()) / (3.0 * k * k);
  if (trace.tight_path) {
    result.tight_path = trace.tight_path;
    result.subgraph = Hypergraph(3, h.num_vertices());
    return result;
  }
  if (h.empty()) {
    result.subgraph = Hypergraph(3, h.num_vertices());
    return result;
  }

  std::size_t chosen = 0;
  for (std::size_t i = 1; i < trace.layers.size(); ++i) {
    if (trace.layers[i].edges.size() > trace.layers[chosen].edges.size()) chosen = i;
  }
  const LightLayer& layer = trace.layers[chosen];
  result.chosen_layer = chosen + 1;
  result.layer_edges = layer.edges.size();

  // Conflict graph on the layer: two edges clash when they share a pair that
  // is light inside the layer itself.
  auto counts = pair_counts(h, layer.edges);
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> owners;
  for (std::size_t j = 0; j < layer.edges.size(); ++j) {
    for (auto [a, b] : pairs_of(h.edge(layer.edges[j]))) {
      const auto key = pair_key(a, b);
      if (counts[key] < k) owners[key].push_back(j);
    }
  }
  std::vector<std::vector<std::size_t>> conflicts(layer.edges.size());
  for (auto& [key, list] : owners) {
    for (std::size_t x : list) {
      for (std::size_t y : list) {
        if (x != y) conflicts[x].push_back(y);
      }
    }
  }
  for (auto& list : conflicts) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    result.conflict_max_degree = std::max(result.conflict_max_degree, list.size());
  }
  if (result.conflict_max_degree > result.conflict_bound) {
    throw std::logic_error("conflict graph degree " + std::to_string(result.conflict_max_degree) +
                           " exceeds 3k-6 = " + std::to_string(result.conflict_bound) +
                           " in layer " + std::to_string(result.chosen_layer));
  }

  std::vector<char> blocked(layer.edges.size(), 0);
  std::vector<std::size_t> picked;
  for (std::size_t j = 0; j < layer.edges.size(); ++j) {
    if (blocked[j]) continue;
    picked.push_back(j);
    for (std::size_t y : conflicts[j]) blocked[y] = 1;
  }

  std::vector<EdgeId> kept;
  for (std::size_t j : picked) kept.push_back(layer.edges[j]);
  result.subgraph = h.edge_subgraph(kept);

  result.source_edges.assign(result.subgraph.num_edges(), 0);
  result.designated_pairs.assign(result.subgraph.num_edges(), {0, 0});
  for (std::size_t j : picked) {
    const EdgeId source = layer.edges[j];
    const auto local = static_cast<std::size_t>(result.subgraph.find_edge(h.edge(source)));
    result.source_edges[local] = source;
    // Every layer-light pair of a picked edge is owned by no other picked edge.
    VertexPair designated = layer.light_pairs[j];
    for (auto [a, b] : pairs_of(h.edge(source))) {
      if (counts[pair_key(a, b)] < k) {
        designated = {a, b};
        break;
      }
    }
    if (result.subgraph.pair_degree(designated.first, designated.second) != 1) {
      throw std::logic_error("designated pair does not have codegree 1");
    }
    result.designated_pairs[local] = designated;
  }

  if (!(static_cast<double>(result.subgraph.num_edges()) > result.size_bound)) {
    throw std::logic_error("heavy subgraph has " + std::to_string(result.subgraph.num_edges()) +
                           " edges, not above |H|/(3k^2) = " + std::to_string(result.size_bound));
  }
  return result;
}

namespace {

std::vector<EdgeId> rainbow_private_edges(const Hypergraph& h, const std::vector<int>& coloring) {
  std::vector<EdgeId> edges;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    std::array<VertexId, 3> by_color{kNoVertex, kNoVertex, kNoVertex};
    for (VertexId v : h.edge(i)) by_color[coloring[v] - 1] = v;
    if (by_color[0] == kNoVertex || by_color[1] == kNoVertex || by_color[2] == kNoVertex) {
      continue;
    }
    if (h.pair_degree(by_color[0], by_color[1]) == 1) edges.push_back(static_cast<EdgeId>(i));
  }
  return edges;
}

}  // namespace

ColorSplit color_split_fixed(const Hypergraph& h, std::vector<int> coloring) {
  require_triple_system(h);
  const std::size_t n = h.num_vertices();
  if (coloring.size() != n) throw std::invalid_argument("colouring size does not match");
  for (int c : coloring) {
    if (c < 1 || c > 3) throw std::invalid_argument("colours must be 1, 2 or 3");
  }

  ColorSplit out;
  out.tries = 1;
  out.kept_edges = rainbow_private_edges(h, coloring);
  out.coloring = std::move(coloring);

  std::vector<std::pair<GraphEdge, std::pair<VertexId, EdgeId>>> links;
  for (EdgeId id : out.kept_edges) {
    VertexId one = kNoVertex, two = kNoVertex, three = kNoVertex;
    for (VertexId v : h.edge(id)) {
      if (out.coloring[v] == 1) one = v;
      if (out.coloring[v] == 2) two = v;
      if (out.coloring[v] == 3) three = v;
    }
    links.push_back({{std::min(one, two), std::max(one, two)}, {three, id}});
  }
  std::sort(links.begin(), links.end());
  std::vector<GraphEdge> graph_edges;
  for (const auto& [edge, info] : links) {
    graph_edges.push_back(edge);
    out.apex.push_back(info.first);
    out.link_source.push_back(info.second);
  }
  out.link = Graph(n, std::move(graph_edges));
  out.ratio = h.empty() ? 0.0
                        : static_cast<double>(out.kept_edges.size()) /
                              static_cast<double>(h.num_edges());
  out.meets_expectation = 27 * out.kept_edges.size() >= h.num_edges();
  return out;
}

ColorSplit color_split(const Hypergraph& h, std::uint64_t seed, std::size_t tries) {
  require_triple_system(h);
  if (tries == 0) throw std::invalid_argument("tries must be positive");

  std::vector<int> best_coloring;
  std::size_t best_count = 0;
  for (std::size_t t = 0; t < tries; ++t) {
    Rng rng(split_seed(seed, t));
    std::vector<int> coloring(h.num_vertices());
    for (auto& c : coloring) c = static_cast<int>(rng.below(3)) + 1;
    const std::size_t count = rainbow_private_edges(h, coloring).size();
    if (t == 0 || count > best_count) {
      best_coloring = std::move(coloring);
      best_count = count;
    }
  }
  ColorSplit out = color_split_fixed(h, std::move(best_coloring));
  out.tries = tries;
  return out;
}

}  // namespace berge
