#include "berge/indep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "berge/rng.hpp"
#include "berge/types.hpp"

namespace berge {
namespace {

enum class State : char { undecided, in, out };

class AlphaSearch {
 public:
  AlphaSearch(const Hypergraph& h, std::uint64_t budget)
      : h_(h),
        r_(h.uniformity()),
        budget_(budget),
        state_(h.num_vertices(), State::undecided),
        in_count_(h.num_edges(), 0),
        out_count_(h.num_edges(), 0),
        mark_(h.num_vertices(), 0) {}

  void seed_with(std::vector<VertexId> best) { best_ = std::move(best); }

  // Bound for the current partial assignment.
  std::size_t bound() {
    std::size_t undecided = 0;
    for (State s : state_) undecided += s == State::undecided;
    ++epoch_;
    std::size_t packing = 0;
    for (std::size_t i = 0; i < h_.num_edges(); ++i) {
      if (out_count_[i] != 0) continue;
      bool disjoint = true;
      for (VertexId v : h_.edge(i)) {
        if (state_[v] == State::undecided && mark_[v] == epoch_) disjoint = false;
      }
      if (!disjoint) continue;
      ++packing;
      for (VertexId v : h_.edge(i)) {
        if (state_[v] == State::undecided) mark_[v] = epoch_;
      }
    }
    return in_.size() + undecided - packing;
  }

  void run() { solve(); }

  const std::vector<VertexId>& best() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void set_in(VertexId v) {
    state_[v] = State::in;
    in_.push_back(v);
    for (EdgeId id : h_.incident(v)) ++in_count_[id];
  }
  void unset_in(VertexId v) {
    state_[v] = State::undecided;
    in_.pop_back();
    for (EdgeId id : h_.incident(v)) --in_count_[id];
  }
  void set_out(VertexId v) {
    state_[v] = State::out;
    for (EdgeId id : h_.incident(v)) ++out_count_[id];
  }
  void unset_out(VertexId v) {
    state_[v] = State::undecided;
    for (EdgeId id : h_.incident(v)) --out_count_[id];
  }

  bool completes_edge(VertexId v) const {
    for (EdgeId id : h_.incident(v)) {
      if (out_count_[id] == 0 && in_count_[id] + 1 == r_) return true;
    }
    return false;
  }

  void solve() {
    if (++nodes_ > budget_) throw BudgetExceeded("independence search budget exceeded", nodes_);

    std::size_t pick = SIZE_MAX;
    std::size_t fewest = SIZE_MAX;
    for (std::size_t i = 0; i < h_.num_edges(); ++i) {
      if (out_count_[i] != 0) continue;
      const std::size_t open = r_ - in_count_[i];
      if (open < fewest) {
        fewest = open;
        pick = i;
      }
    }
    if (pick == SIZE_MAX) {
      std::vector<VertexId> found = in_;
      for (VertexId v = 0; v < state_.size(); ++v) {
        if (state_[v] == State::undecided) found.push_back(v);
      }
      if (found.size() > best_.size()) best_ = std::move(found);
      return;
    }
    if (bound() <= best_.size()) return;

    VertexId v = kNoVertex;
    for (VertexId w : h_.edge(pick)) {
      if (state_[w] == State::undecided) {
        v = w;
        break;
      }
    }
    if (fewest > 1 && !completes_edge(v)) {
      set_in(v);
      solve();
      unset_in(v);
    }
    set_out(v);
    solve();
    unset_out(v);
  }

  const Hypergraph& h_;
  std::size_t r_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<State> state_;
  std::vector<std::size_t> in_count_;
  std::vector<std::size_t> out_count_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t epoch_ = 0;
  std::vector<VertexId> in_;
  std::vector<VertexId> best_;
};

std::vector<VertexId> greedy_independent(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return h.degree(a) < h.degree(b); });
  std::vector<std::size_t> in_count(h.num_edges(), 0);
  std::vector<VertexId> chosen;
  for (VertexId v : order) {
    bool blocked = false;
    for (EdgeId id : h.incident(v)) blocked = blocked || in_count[id] + 1 == h.uniformity();
    if (blocked) continue;
    chosen.push_back(v);
    for (EdgeId id : h.incident(v)) ++in_count[id];
  }
  return chosen;
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

}  // namespace

AlphaResult alpha_exact(const Hypergraph& h, std::uint64_t budget) {
  AlphaSearch search(h, budget);
  search.seed_with(greedy_independent(h));
  const std::size_t root_bound = std::max(search.bound(), search.best().size());
  AlphaResult result;
  try {
    search.run();
    result.exact = true;
  } catch (const BudgetExceeded&) {
    result.exact = false;
  }
  result.witness = search.best();
  std::sort(result.witness.begin(), result.witness.end());
  result.lower = result.witness.size();
  result.upper = result.exact ? result.lower : root_bound;
  if (result.upper == result.lower) result.exact = true;
  result.nodes = search.nodes();
  return result;
}

IndepProbEstimate indep_prob_mc(const Hypergraph& h, std::size_t s, std::uint64_t trials,
                                std::uint64_t seed) {
  const std::size_t n = h.num_vertices();
  if (s > n) throw std::invalid_argument("sample size exceeds the vertex count");
  if (trials == 0) throw std::invalid_argument("trials must be positive");

  constexpr std::uint64_t kChunk = 4096;
  std::vector<VertexId> pool(n);
  std::vector<std::uint64_t> stamp(n, 0);
  std::uint64_t epoch = 0;
  std::uint64_t hits = 0;
  const std::size_t r = h.uniformity();

  for (std::uint64_t start = 0, chunk = 0; start < trials; start += kChunk, ++chunk) {
    Rng rng(split_seed(seed, chunk));
    std::iota(pool.begin(), pool.end(), VertexId{0});
    const std::uint64_t end = std::min(trials, start + kChunk);
    for (std::uint64_t trial = start; trial < end; ++trial) {
      rng.partial_shuffle(pool, s);
      ++epoch;
      for (std::size_t i = 0; i < s; ++i) stamp[pool[i]] = epoch;
      bool independent = s < r;
      if (!independent) {
        independent = true;
        for (std::size_t i = 0; i < s && independent; ++i) {
          for (EdgeId id : h.incident(pool[i])) {
            auto e = h.edge(id);
            if (e[0] != pool[i]) continue;  // each edge tested once, from its least vertex
            if (std::all_of(e.begin(), e.end(), [&](VertexId v) { return stamp[v] == epoch; })) {
              independent = false;
              break;
            }
          }
        }
      }
      hits += independent;
    }
  }

  IndepProbEstimate out;
  out.s = s;
  out.trials = trials;
  out.hits = hits;
  out.estimate = static_cast<double>(hits) / static_cast<double>(trials);
  out.std_error = std::sqrt(out.estimate * (1 - out.estimate) / static_cast<double>(trials));
  out.half_width = 2.576 * out.std_error;
  return out;
}

UnionBoundReport union_bound_report(const ConstructionTrace& trace, std::size_t t) {
  UnionBoundReport out;
  out.kind = trace.kind;
  out.t = t;
  out.vertices = trace.y_side.size();
  if (t > out.vertices) throw std::invalid_argument("t exceeds the number of hypergraph vertices");

  const Graph& g = trace.source;
  out.min_degree_y = SIZE_MAX;
  for (VertexId y : trace.y_side) out.min_degree_y = std::min(out.min_degree_y, g.degree(y));
  if (trace.y_side.empty()) out.min_degree_y = 0;
  out.edge_lower = static_cast<double>(t) * static_cast<double>(out.min_degree_y);
  out.log_binom = log_binomial(static_cast<double>(out.vertices), static_cast<double>(t));

  const double n_host = static_cast<double>(trace.host_vertices);
  const bool have_host = trace.host_vertices > 1 && trace.c > 0;

  if (trace.kind == "t2") {
    // ln P <= -sum m_x s_x / (2 d_x) + sum r m_x^2 / (2 d_x), and the first
    // sum is at least (min_x m_x / (2 d_x)) * sum_x s_x.
    double slope = std::numeric_limits<double>::infinity();
    double penalty = 0;
    for (const Placement& p : trace.placements) {
      const double d = static_cast<double>(g.degree(p.x));
      if (d == 0 || p.m_used == 0) continue;
      const double m = static_cast<double>(p.m_used);
      slope = std::min(slope, m / (2 * d));
      penalty += static_cast<double>(trace.r) * m * m / (2 * d);
    }
    if (!std::isfinite(slope)) slope = 0;
    out.log_prob = std::min(0.0, -slope * out.edge_lower + penalty);
    if (have_host) {
      const double tt = static_cast<double>(t);
      out.closed_form_exponent =
          tt * std::log(n_host) -
          std::pow(trace.c, static_cast<double>(trace.k)) * static_cast<double>(trace.m) * tt / 4;
    }
  } else if (trace.kind == "t3") {
    // With f_x(s) = -ln bound(d_x, s) we have f_x(s) >= rho (s - 6) for all
    // s, where rho is the least slope over s > 6; summing gives
    // -ln P >= rho (edge_lower - 6 |X|).
    std::map<std::size_t, double> slope_by_degree;
    for (const Placement& p : trace.placements) {
      const std::size_t d = g.degree(p.x);
      if (slope_by_degree.count(d)) continue;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t s = 7; s <= d; ++s) {
        const double f = -std::log(indep_prob_bound_jn(d, s).value);
        best = std::min(best, f / static_cast<double>(s - 6));
      }
      slope_by_degree[d] = best;
    }
    double rho = std::numeric_limits<double>::infinity();
    for (const auto& [d, slope] : slope_by_degree) rho = std::min(rho, slope);
    const double excess = out.edge_lower - 6.0 * static_cast<double>(trace.x_side.size());
    out.log_prob = (std::isfinite(rho) && excess > 0) ? -rho * excess : 0.0;
    out.notes.push_back("per-x bounds are proven only for large n");
    const double tt = static_cast<double>(t);
    if (have_host) {
      const double scale = std::pow(n_host, 13.0 / 16.0);
      const double m = tt / scale;
      out.closed_form_exponent =
          tt * std::log(n_host) - m * m * m * scale / (32 * std::sqrt(trace.c));
      out.case_split_threshold = std::pow(n_host, 5.0 / 6.0);
    }
    out.heavy_cutoff = std::sqrt(tt) / 2;
    out.notes.push_back("case split on heavy x is reported, not applied");
  } else {
    throw std::invalid_argument("unknown construction kind: " + trace.kind);
  }

  out.log_expected = out.log_binom + out.log_prob;
  out.conclusive = out.log_expected < 0;
  if (!out.conclusive) out.notes.push_back("bound is at least 1 at this scale: inconclusive");
  return out;
}

}  // namespace berge
