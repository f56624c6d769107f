#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_set>

#include "berge/berge_cycle.hpp"
#include "berge/constructions.hpp"
#include "berge/rng.hpp"

namespace berge {
namespace {

std::uint64_t pair_key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Growing 3-graph with the incidence layout the cycle search expects.
class GrowingTriples {
 public:
  explicit GrowingTriples(std::size_t n) : n_(n), incidence_(n) {}

  EdgeId push(const std::array<VertexId, 3>& t) {
    const auto id = static_cast<EdgeId>(flat_.size() / 3);
    for (VertexId v : t) {
      flat_.push_back(v);
      incidence_[v].push_back(id);
    }
    return id;
  }

  void pop() {
    for (int i = 0; i < 3; ++i) {
      incidence_[flat_.back()].pop_back();
      flat_.pop_back();
    }
  }

  IncidenceView view() const { return {3, n_, flat_, incidence_}; }
  std::size_t degree(VertexId v) const { return incidence_[v].size(); }
  std::vector<std::vector<VertexId>> edges() const {
    std::vector<std::vector<VertexId>> out;
    for (std::size_t i = 0; i < flat_.size(); i += 3) {
      out.push_back({flat_[i], flat_[i + 1], flat_[i + 2]});
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<VertexId> flat_;
  std::vector<std::vector<EdgeId>> incidence_;
};

}  // namespace

JnReport jn_supplier(std::size_t n, std::uint64_t seed) {
  JnReport report;
  report.max_degree_cap = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  report.target_edges = std::pow(static_cast<double>(n), 1.5) / 10.0;
  if (n < 3) {
    report.graph = Hypergraph(3, n);
    return report;
  }

  Rng rng(seed);
  std::vector<std::array<VertexId, 3>> candidates;
  const double all = static_cast<double>(n) * (n - 1) * (n - 2) / 6.0;
  if (all <= 2.0e6) {
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        for (VertexId c = b + 1; c < n; ++c) candidates.push_back({a, b, c});
      }
    }
    rng.shuffle(candidates);
  } else {
    // Too many triples to list: sample; repeats fail the linearity test.
    const auto draws = static_cast<std::size_t>(20.0 * std::pow(static_cast<double>(n), 1.5));
    candidates.reserve(draws);
    while (candidates.size() < draws) {
      std::array<VertexId, 3> t{static_cast<VertexId>(rng.below(n)),
                                static_cast<VertexId>(rng.below(n)),
                                static_cast<VertexId>(rng.below(n))};
      std::sort(t.begin(), t.end());
      if (t[0] == t[1] || t[1] == t[2]) continue;
      candidates.push_back(t);
    }
  }

  GrowingTriples grown(n);
  std::unordered_set<std::uint64_t> covered;
  for (const auto& t : candidates) {
    ++report.candidates_scanned;
    if (grown.degree(t[0]) >= report.max_degree_cap || grown.degree(t[1]) >= report.max_degree_cap ||
        grown.degree(t[2]) >= report.max_degree_cap) {
      continue;
    }
    const std::uint64_t ab = pair_key(t[0], t[1]), ac = pair_key(t[0], t[2]),
                        bc = pair_key(t[1], t[2]);
    if (covered.count(ab) || covered.count(ac) || covered.count(bc)) continue;
    const EdgeId id = grown.push(t);
    bool ok = true;
    // Linearity already excludes B_2.
    for (std::size_t k : {3u, 4u}) {
      auto res = find_berge_cycle_through(grown.view(), id, k, CycleMode::trivial_allowed);
      if (res.status != SearchStatus::absent) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      grown.pop();
      continue;
    }
    covered.insert(ab);
    covered.insert(ac);
    covered.insert(bc);
  }
  report.graph = Hypergraph(3, n, grown.edges());
  return report;
}

}  // namespace berge
