#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berge/constructions.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

inline constexpr std::uint64_t kDefaultAlphaBudget = 10'000'000;

struct AlphaResult {
  std::size_t lower = 0;          // |witness|
  std::size_t upper = 0;
  bool exact = false;             // lower == upper and the search finished
  std::vector<VertexId> witness;  // independent, ascending
  std::uint64_t nodes = 0;
};

// Branch and bound: branch in/out on a vertex of an open edge with the
// fewest undecided vertices; prune with a disjoint-edge packing bound.
// Returns a bracket instead of throwing when the budget runs out.
AlphaResult alpha_exact(const Hypergraph& h, std::uint64_t budget = kDefaultAlphaBudget);

struct IndepProbEstimate {
  std::size_t s = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double estimate = 0;      // hits / trials
  double half_width = 0;    // 2.576 sqrt(p(1-p)/trials)
  double std_error = 0;     // sqrt(p(1-p)/trials)
};

// Fraction of uniform s-subsets that are independent. Trials run in chunks
// whose seeds are split off `seed`. Throws std::invalid_argument when
// s > n or trials == 0.
IndepProbEstimate indep_prob_mc(const Hypergraph& h, std::size_t s, std::uint64_t trials,
                                std::uint64_t seed);

struct UnionBoundReport {
  std::string kind;                // "t2" or "t3"
  std::size_t t = 0;
  std::size_t vertices = 0;        // |Y|
  std::size_t min_degree_y = 0;    // min degree of Y in G'
  double edge_lower = 0;           // t * min_degree_y
  double log_binom = 0;            // ln C(|Y|, t)
  double log_prob = 0;             // ln of the per-set independence bound
  double log_expected = 0;         // log_binom + log_prob
  bool conclusive = false;         // log_expected < 0
  // Closed-form exponent from the asymptotic accounting, when the host
  // graph's n and c are known. t2: t ln n - c^k m t / 4. t3: t ln n -
  // m'^3 n^{13/16} / (32 sqrt c) with m' = t / n^{13/16}.
  std::optional<double> closed_form_exponent;
  double case_split_threshold = 0;  // t3: n^{5/6}
  double heavy_cutoff = 0;          // t3: sqrt(t) / 2
  std::vector<std::string> notes;
};

// Expected number of independent t-sets in the traced construction,
// bounded through the per-x independence bounds and the worst-case count
// of G' edges between X and a t-set of Y. Throws std::invalid_argument when
// t exceeds |Y|.
UnionBoundReport union_bound_report(const ConstructionTrace& trace, std::size_t t);

}  // namespace berge
