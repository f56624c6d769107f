#pragma once

#include <cstdint>
#include <optional>

#include "berge/graph.hpp"

namespace berge {

bool is_prime(std::uint64_t q);

// Point-line incidence graph of PG(2, q): points are vertices
// 0..q^2+q, lines follow. 2(q^2+q+1) vertices, (q+1)-regular, girth 6.
// Throws std::invalid_argument unless q is prime.
Graph incidence_pp(std::uint64_t q);

// Point-line incidence graph of the symplectic generalized quadrangle W(q)
// (points of PG(3, q), totally isotropic lines of x0y1 - x1y0 + x2y3 - x3y2).
// 2(q+1)(q^2+1) vertices, (q+1)-regular, girth 8. Points come first.
Graph incidence_gq(std::uint64_t q);

// Random bipartite graph with sides of the given sizes and girth at least
// `min_girth`, built by scanning all cross pairs in seeded random order and
// keeping a pair when it closes no cycle shorter than `min_girth`. Left side
// is 0..left-1. `max_degree` = 0 means unbounded.
Graph random_high_girth_bipartite(std::size_t left, std::size_t right, std::size_t min_girth,
                                  std::uint64_t seed, std::size_t max_degree = 0);

// BFS 2-colouring; nullopt when g has an odd cycle. Isolated vertices go
// left. Colour classes are listed in increasing vertex order.
std::optional<Bipartition> two_coloring(const Graph& g);

}  // namespace berge
