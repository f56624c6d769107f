#include "berge/polygons.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include "berge/girth.hpp"
#include "berge/rng.hpp"

namespace berge {

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

namespace {

// Projective points of PG(dim-1, q) as normalized vectors: first nonzero
// coordinate equals 1. Enumerated in lexicographic order.
template <std::size_t Dim>
std::vector<std::array<std::uint64_t, Dim>> projective_points(std::uint64_t q) {
  std::vector<std::array<std::uint64_t, Dim>> pts;
  std::array<std::uint64_t, Dim> v{};
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < Dim; ++i) total *= q;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = Dim; i-- > 0;) {
      v[i] = c % q;
      c /= q;
    }
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] == 1) pts.push_back(v);
  }
  return pts;
}

template <std::size_t Dim>
std::array<std::uint64_t, Dim> normalize(std::array<std::uint64_t, Dim> v, std::uint64_t q) {
  std::size_t lead = 0;
  while (lead < Dim && v[lead] == 0) ++lead;
  if (lead == Dim) return v;
  // Inverse by Fermat (q prime).
  std::uint64_t inv = 1, base = v[lead], e = q - 2;
  while (e) {
    if (e & 1) inv = inv * base % q;
    base = base * base % q;
    e >>= 1;
  }
  for (auto& x : v) x = x * inv % q;
  return v;
}

void require_prime(std::uint64_t q) {
  if (!is_prime(q)) throw std::invalid_argument("q must be prime, got " + std::to_string(q));
}

}  // namespace

Graph incidence_pp(std::uint64_t q) {
  require_prime(q);
  auto pts = projective_points<3>(q);
  const std::size_t np = pts.size();
  std::vector<GraphEdge> edges;
  // Lines of PG(2,q) are the same normalized vectors (duality via dot product).
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t l = 0; l < np; ++l) {
      std::uint64_t dot = 0;
      for (std::size_t i = 0; i < 3; ++i) dot += pts[p][i] * pts[l][i];
      if (dot % q == 0) edges.emplace_back(static_cast<VertexId>(p), static_cast<VertexId>(np + l));
    }
  }
  return Graph(2 * np, std::move(edges));
}

Graph incidence_gq(std::uint64_t q) {
  require_prime(q);
  auto pts = projective_points<4>(q);
  const std::size_t np = pts.size();
  std::map<std::array<std::uint64_t, 4>, std::size_t> index;
  for (std::size_t i = 0; i < np; ++i) index[pts[i]] = i;

  auto form = [q](const auto& x, const auto& y) {
    return (x[0] * y[1] + q * q - x[1] * y[0] + x[2] * y[3] + q * q - x[3] * y[2]) % q;
  };

  std::set<std::vector<std::size_t>> lines;
  for (std::size_t a = 0; a < np; ++a) {
    for (std::size_t b = a + 1; b < np; ++b) {
      if (form(pts[a], pts[b]) != 0) continue;
      std::vector<std::size_t> line{a, b};
      for (std::uint64_t lambda = 1; lambda < q; ++lambda) {
        std::array<std::uint64_t, 4> v{};
        for (std::size_t i = 0; i < 4; ++i) v[i] = (pts[a][i] + lambda * pts[b][i]) % q;
        line.push_back(index.at(normalize(v, q)));
      }
      std::sort(line.begin(), line.end());
      lines.insert(std::move(line));
    }
  }
  std::vector<GraphEdge> edges;
  std::size_t l = 0;
  for (const auto& line : lines) {
    for (std::size_t p : line) {
      edges.emplace_back(static_cast<VertexId>(p), static_cast<VertexId>(np + l));
    }
    ++l;
  }
  return Graph(np + lines.size(), std::move(edges));
}

Graph random_high_girth_bipartite(std::size_t left, std::size_t right, std::size_t min_girth,
                                  std::uint64_t seed, std::size_t max_degree) {
  const std::size_t n = left + right;
  std::vector<GraphEdge> pairs;
  pairs.reserve(left * right);
  for (VertexId u = 0; u < left; ++u) {
    for (VertexId v = 0; v < right; ++v) pairs.emplace_back(u, static_cast<VertexId>(left + v));
  }
  Rng rng(seed);
  rng.shuffle(pairs);

  std::vector<std::vector<VertexId>> adj(n);
  std::vector<std::size_t> dist(n, kInfiniteGirth);
  std::vector<VertexId> touched;
  std::vector<GraphEdge> kept;
  // Adding uv closes a cycle of length dist(u, v) + 1.
  const std::size_t limit = min_girth >= 2 ? min_girth - 2 : 0;
  for (const auto& [u, v] : pairs) {
    if (max_degree && (adj[u].size() >= max_degree || adj[v].size() >= max_degree)) continue;
    bool close = false;
    touched.assign(1, u);
    dist[u] = 0;
    std::vector<VertexId> frontier{u}, next;
    for (std::size_t d = 1; d <= limit && !frontier.empty() && !close; ++d) {
      next.clear();
      for (VertexId a : frontier) {
        for (VertexId b : adj[a]) {
          if (dist[b] != kInfiniteGirth) continue;
          if (b == v) {
            close = true;
            break;
          }
          dist[b] = d;
          touched.push_back(b);
          next.push_back(b);
        }
        if (close) break;
      }
      frontier.swap(next);
    }
    for (VertexId t : touched) dist[t] = kInfiniteGirth;
    if (close) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
    kept.emplace_back(u, v);
  }
  return Graph(n, std::move(kept));
}

std::optional<Bipartition> two_coloring(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> color(n, -1);
  for (VertexId s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<VertexId> queue;
    queue.push(s);
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop();
      for (VertexId w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          queue.push(w);
        } else if (color[w] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (VertexId v = 0; v < n; ++v) (color[v] == 0 ? parts.left : parts.right).push_back(v);
  return parts;
}

}  // namespace berge
