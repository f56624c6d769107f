#include "berge/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "berge/girth.hpp"
#include "berge/rng.hpp"

namespace berge {
namespace {

struct Sides {
  std::vector<VertexId> x;
  std::vector<VertexId> y;
};

Sides choose_sides(const Graph& source, const Bipartition& parts, std::size_t min_girth_exclusive) {
  if (!is_valid_bipartition(source, parts)) {
    throw std::invalid_argument("bipartition does not match the source graph");
  }
  const GirthReport gr = girth(source);
  if (!gr.is_forest() && gr.girth <= min_girth_exclusive) {
    throw std::invalid_argument("source girth " + std::to_string(gr.girth) +
                                " is not more than " + std::to_string(min_girth_exclusive));
  }
  Sides s;
  const bool left_is_x = parts.left.size() <= parts.right.size();
  s.x = left_is_x ? parts.left : parts.right;
  s.y = left_is_x ? parts.right : parts.left;
  std::sort(s.x.begin(), s.x.end());
  std::sort(s.y.begin(), s.y.end());
  return s;
}

// Places `local` (on vertices 0..d-1) onto N(x) via a seeded bijection and
// appends the mapped edges.
template <typename LocalFn>
ConstructionTrace place_all(const Graph& source, const Bipartition& parts, Sides sides,
                            std::uint64_t seed, std::size_t r, LocalFn make_local) {
  ConstructionTrace trace;
  trace.r = r;
  trace.source = source;
  trace.parts = parts;
  trace.seed = seed;
  std::vector<VertexId> local_id(source.num_vertices(), kNoVertex);
  for (std::size_t i = 0; i < sides.y.size(); ++i) local_id[sides.y[i]] = static_cast<VertexId>(i);

  std::set<std::vector<VertexId>> edges;
  for (VertexId x : sides.x) {
    Placement p;
    p.x = x;
    for (VertexId y : source.neighbors(x)) p.image.push_back(local_id[y]);
    Rng rng(split_seed(seed, x));
    rng.shuffle(p.image);
    Hypergraph local = make_local(p, trace);
    p.local_edges = local.num_edges();
    for (std::size_t i = 0; i < local.num_edges(); ++i) {
      std::vector<VertexId> e;
      for (VertexId v : local.edge(i)) e.push_back(p.image[v]);
      std::sort(e.begin(), e.end());
      edges.insert(std::move(e));
    }
    trace.placements.push_back(std::move(p));
  }
  std::vector<VertexId> origin;
  for (VertexId y : sides.y) origin.push_back(source.origin(y));
  trace.hypergraph = Hypergraph(r, sides.y.size(),
                                std::vector<std::vector<VertexId>>(edges.begin(), edges.end()),
                                std::move(origin));
  trace.x_side = std::move(sides.x);
  trace.y_side = std::move(sides.y);
  return trace;
}

}  // namespace

std::size_t default_star_count(std::size_t n, double c, std::size_t k) {
  if (n < 2 || c <= 0) return 1;
  const double m = 8.0 * std::log(static_cast<double>(n)) / std::pow(c, static_cast<double>(k));
  if (!std::isfinite(m)) return 1;
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(m)));
}

ConstructionTrace build_theorem2(const Graph& source, const Bipartition& parts, std::size_t k,
                                 std::size_t r, std::size_t m, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("star build needs k >= 2");
  if (r < 2) throw std::invalid_argument("star build needs r >= 2");
  if (m < 1) throw std::invalid_argument("star build needs m >= 1");
  Sides sides = choose_sides(source, parts, 2 * k);
  std::size_t clamped = 0, undersized = 0;
  auto make_star = [&](Placement& p, ConstructionTrace&) {
    const std::size_t d = p.image.size();
    if (d == 0) return Hypergraph(r, 0);
    p.m_used = std::min(m, d);
    p.clamped = p.m_used < m;
    clamped += p.clamped;
    StarSystem star = star_system({r, d, p.m_used});
    undersized += star.undersized_classes;
    return std::move(star.graph);
  };
  ConstructionTrace trace = place_all(source, parts, std::move(sides), seed, r, make_star);
  trace.kind = "t2";
  trace.k = k;
  trace.r = r;
  trace.m = m;
  if (clamped) {
    trace.flags.push_back("m clamped to d(x) at " + std::to_string(clamped) + " placements");
  }
  if (undersized) {
    trace.flags.push_back(std::to_string(undersized) + " star classes smaller than r (no edges)");
  }
  return trace;
}

ConstructionTrace build_theorem3(const Graph& source, const Bipartition& parts,
                                 std::uint64_t seed) {
  Sides sides = choose_sides(source, parts, 8);
  auto make_j = [&](Placement& p, ConstructionTrace&) {
    p.local_seed = split_seed(seed, 0x4a00000000ULL + p.x);
    return jn_supplier(p.image.size(), p.local_seed).graph;
  };
  ConstructionTrace trace = place_all(source, parts, std::move(sides), seed, 3, make_j);
  trace.kind = "t3";
  trace.k = 4;
  trace.r = 3;
  return trace;
}

bool replay_matches(const ConstructionTrace& trace) {
  ConstructionTrace again =
      trace.kind == "t3"
          ? build_theorem3(trace.source, trace.parts, trace.seed)
          : build_theorem2(trace.source, trace.parts, trace.k, trace.r, trace.m, trace.seed);
  if (!(again.hypergraph == trace.hypergraph)) return false;
  if (again.placements.size() != trace.placements.size()) return false;
  for (std::size_t i = 0; i < again.placements.size(); ++i) {
    if (again.placements[i].x != trace.placements[i].x ||
        again.placements[i].image != trace.placements[i].image) {
      return false;
    }
  }
  return true;
}

}  // namespace berge
