#include "berge/census.hpp"

#include <cmath>
#include <queue>
#include <set>
#include <stdexcept>

#include "berge/types.hpp"

namespace berge {
namespace {

class CycleEnumerator {
 public:
  CycleEnumerator(const Graph& g, std::size_t length, std::uint64_t budget, bool per_edge)
      : g_(g), length_(length), budget_(budget), on_path_(g.num_vertices(), 0) {
    if (per_edge) counts_.assign(g.num_edges(), 0);
  }

  void run() {
    for (VertexId s = 0; s < g_.num_vertices(); ++s) {
      start_ = s;
      path_.assign(1, s);
      on_path_[s] = 1;
      dfs();
      on_path_[s] = 0;
    }
  }

  std::uint64_t total() const { return total_; }
  std::uint64_t nodes() const { return nodes_; }
  std::vector<std::uint64_t>& counts() { return counts_; }

 private:
  void dfs() {
    const VertexId last = path_.back();
    if (path_.size() == length_) {
      if (path_[1] < last && g_.has_edge(last, start_)) {
        ++total_;
        if (!counts_.empty()) {
          for (std::size_t i = 0; i < length_; ++i) {
            counts_[static_cast<std::size_t>(
                g_.edge_index(path_[i], path_[(i + 1) % length_]))]++;
          }
        }
      }
      return;
    }
    for (VertexId w : g_.neighbors(last)) {
      if (w <= start_ || on_path_[w]) continue;
      if (++nodes_ > budget_) throw BudgetExceeded("cycle census budget exceeded", nodes_);
      on_path_[w] = 1;
      path_.push_back(w);
      dfs();
      path_.pop_back();
      on_path_[w] = 0;
    }
  }

  const Graph& g_;
  std::size_t length_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::uint64_t total_ = 0;
  VertexId start_ = 0;
  std::vector<VertexId> path_;
  std::vector<char> on_path_;
  std::vector<std::uint64_t> counts_;
};

}  // namespace

std::uint64_t count_cycles(const Graph& g, std::size_t length, std::uint64_t budget) {
  if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
  CycleEnumerator e(g, length, budget, false);
  e.run();
  return e.total();
}

CycleCensus cycle_census(const Graph& g, std::size_t length, std::uint64_t budget) {
  if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
  CycleEnumerator e(g, length, budget, true);
  e.run();
  return {length, e.total(), std::move(e.counts()), e.nodes()};
}

void for_each_cycle_through_edge(const Graph& g, VertexId u, VertexId v, std::size_t length,
                                 const std::function<void(const std::vector<VertexId>&)>& visit,
                                 std::uint64_t budget, std::uint64_t* nodes_out) {
  if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
  if (!g.has_edge(u, v)) throw std::invalid_argument("query pair is not an edge");
  const std::size_t n = g.num_vertices();

  // Distances to u bound how far a partial path may still wander.
  std::vector<std::size_t> to_u(n, SIZE_MAX);
  {
    std::queue<VertexId> queue;
    to_u[u] = 0;
    queue.push(u);
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop();
      for (VertexId y : g.neighbors(x)) {
        if (to_u[y] == SIZE_MAX) {
          to_u[y] = to_u[x] + 1;
          queue.push(y);
        }
      }
    }
  }

  std::uint64_t nodes = 0;
  std::vector<char> on_path(n, 0);
  std::vector<VertexId> cycle{u, v};
  on_path[u] = on_path[v] = 1;

  auto dfs = [&](auto&& self) -> void {
    const VertexId last = cycle.back();
    if (cycle.size() == length) {
      if (g.has_edge(last, u)) visit(cycle);
      return;
    }
    const std::size_t remaining = length - cycle.size();  // vertices still to add
    for (VertexId w : g.neighbors(last)) {
      if (on_path[w]) continue;
      if (to_u[w] == SIZE_MAX || to_u[w] > remaining) continue;
      if (++nodes > budget) {
        if (nodes_out) *nodes_out = nodes;
        throw BudgetExceeded("cycle census budget exceeded", nodes);
      }
      on_path[w] = 1;
      cycle.push_back(w);
      self(self);
      cycle.pop_back();
      on_path[w] = 0;
    }
  };
  dfs(dfs);
  if (nodes_out) *nodes_out = nodes;
}

EdgeCycles cycles_through_edge(const Graph& g, VertexId u, VertexId v, std::size_t length,
                               std::uint64_t budget) {
  EdgeCycles out;
  std::vector<char> in_union(g.num_edges(), 0);
  for_each_cycle_through_edge(
      g, u, v, length,
      [&](const std::vector<VertexId>& cycle) {
        ++out.count;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          in_union[static_cast<std::size_t>(
              g.edge_index(cycle[i], cycle[(i + 1) % cycle.size()]))] = 1;
        }
      },
      budget, &out.nodes);
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (in_union[i]) edges.push_back(g.edge(i));
  }
  out.union_graph = Graph(g.num_vertices(), std::move(edges), g.origin_map());
  return out;
}

BigcpnReport bigcpn_check(const Graph& g, VertexId u, VertexId v, std::size_t k,
                          std::uint64_t budget) {
  if (k < 2) throw std::invalid_argument("bigcpn check needs k >= 2");
  BigcpnReport rep;
  rep.k = k;
  auto ec = cycles_through_edge(g, u, v, 2 * k, budget);
  rep.cycles = ec.count;
  rep.union_edges = ec.union_graph.num_edges();
  rep.bound = std::pow(static_cast<double>(rep.cycles), 1.0 / static_cast<double>(k - 1)) / 2.0;
  // (2|G'|)^{k-1} >= m, evaluated in long double with early exit.
  long double lhs = 1;
  const long double base = 2.0L * static_cast<long double>(rep.union_edges);
  rep.holds = false;
  for (std::size_t i = 0; i < k - 1; ++i) {
    lhs *= base;
    if (lhs >= static_cast<long double>(rep.cycles)) break;
  }
  rep.holds = rep.cycles == 0 || lhs >= static_cast<long double>(rep.cycles);
  return rep;
}

SupersatReport supersat_report(const Graph& g, std::size_t k, std::uint64_t budget) {
  if (k < 2) throw std::invalid_argument("supersaturation report needs k >= 2");
  SupersatReport rep;
  rep.n = g.num_vertices();
  rep.edges = g.num_edges();
  rep.k = k;
  const double n = static_cast<double>(rep.n);
  rep.b = rep.n == 0 ? 0.0
                     : static_cast<double>(rep.edges) /
                           std::pow(n, 1.0 + 1.0 / static_cast<double>(k));
  rep.count = count_cycles(g, 2 * k, budget);
  rep.gamma_hat = rep.b > 0 ? static_cast<double>(rep.count) /
                                  (std::pow(rep.b, 2.0 * static_cast<double>(k)) * n * n)
                            : 0.0;
  return rep;
}

}  // namespace berge
