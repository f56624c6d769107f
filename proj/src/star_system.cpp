#include "berge/constructions.hpp"

#include <cmath>
#include <stdexcept>

namespace berge {

StarSystem star_system(const StarSystemSpec& spec) {
  if (spec.r < 2) throw std::invalid_argument("star system needs r >= 2");
  if (spec.m < 1) throw std::invalid_argument("star system needs m >= 1");
  if (spec.d < spec.m) throw std::invalid_argument("star system needs d >= m");
  StarSystem out;
  std::vector<std::vector<VertexId>> edges;
  const std::size_t base = spec.d / spec.m;
  const std::size_t extra = spec.d % spec.m;
  VertexId begin = 0;
  for (std::size_t i = 0; i < spec.m; ++i) {
    const std::size_t size = base + (i < extra ? 1 : 0);
    const VertexId end = begin + static_cast<VertexId>(size);
    out.classes.emplace_back(begin, end);
    if (size < spec.r) {
      ++out.undersized_classes;
    } else {
      // All (r-1)-subsets of (begin, end), each joined with the center.
      std::vector<VertexId> pick(spec.r - 1);
      for (std::size_t j = 0; j + 1 < spec.r; ++j) pick[j] = begin + 1 + static_cast<VertexId>(j);
      while (true) {
        std::vector<VertexId> e{begin};
        e.insert(e.end(), pick.begin(), pick.end());
        edges.push_back(std::move(e));
        std::size_t j = pick.size();
        while (j > 0 && pick[j - 1] == end - (pick.size() - j) - 1) --j;
        if (j == 0) break;
        ++pick[j - 1];
        for (std::size_t t = j; t < pick.size(); ++t) pick[t] = pick[t - 1] + 1;
      }
    }
    begin = end;
  }
  out.graph = Hypergraph(spec.r, spec.d, std::move(edges));
  return out;
}

double indep_prob_bound_star(std::size_t d, std::size_t m, std::size_t r, std::size_t s) {
  if (m < 1 || d < m) throw std::invalid_argument("bound needs d >= m >= 1");
  if (s <= r * m) return 1.0;
  const double excess = static_cast<double>(s) - static_cast<double>(r * m);
  return std::exp(-static_cast<double>(m) * excess / (2.0 * static_cast<double>(d)));
}

ProbBound indep_prob_bound_jn(std::size_t n, std::size_t s) {
  ProbBound out;
  out.qualitative = n < kJnLargeN;
  const double nd = static_cast<double>(n);
  const double sd = static_cast<double>(s);
  if (sd < std::sqrt(nd) / 2.0) {
    const double exponent = -(sd * sd * sd - 216.0) / (80.0 * std::pow(nd, 1.5));
    out.value = std::min(1.0, std::exp(exponent));
  } else {
    out.value = 639.0 / 640.0;
  }
  return out;
}

}  // namespace berge
