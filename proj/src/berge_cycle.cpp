#include "berge/berge_cycle.hpp"

#include <algorithm>
#include <stdexcept>

#include "berge/sdr.hpp"

namespace berge {

std::string to_string(CycleMode mode) {
  return mode == CycleMode::nontrivial ? "nontrivial" : "trivial";
}

CycleMode parse_cycle_mode(const std::string& text) {
  if (text == "nontrivial") return CycleMode::nontrivial;
  if (text == "trivial" || text == "trivial-allowed") return CycleMode::trivial_allowed;
  throw std::invalid_argument("unknown cycle mode: " + text);
}

namespace {

std::vector<VertexId> intersect(std::span<const VertexId> a, std::span<const VertexId> b) {
  std::vector<VertexId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Fills nontrivial flag and exclusion evidence from the cycle's edges.
template <typename EdgeFn>
void attach_exclusions(BergeWitness& w, EdgeFn edge_of) {
  w.exclusions.clear();
  w.nontrivial = true;
  auto first = edge_of(w.edge_ids.front());
  for (VertexId v : first) {
    EdgeId missing = w.edge_ids.front();
    bool found = false;
    for (EdgeId id : w.edge_ids) {
      auto e = edge_of(id);
      if (!std::binary_search(e.begin(), e.end(), v)) {
        missing = id;
        found = true;
        break;
      }
    }
    if (!found) {
      w.nontrivial = false;
      w.exclusions.clear();
      return;
    }
    w.exclusions.emplace_back(v, missing);
  }
}

class CycleSearcher {
 public:
  CycleSearcher(const IncidenceView& view, std::size_t k, CycleMode mode, std::uint64_t budget)
      : view_(view),
        k_(k),
        mode_(mode),
        budget_(budget),
        matcher_(view.n),
        stamp_(view.num_edges(), 0) {}

  // First edge fixed; when `minimal_first` the remaining edges must have
  // larger ids (rotation canonical form).
  bool run_from(EdgeId first, bool minimal_first) {
    minimal_first_ = minimal_first;
    seq_.assign(1, first);
    in_seq_.assign(view_.num_edges(), 0);
    in_seq_[first] = 1;
    return extend();
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<EdgeId>& cycle() const { return found_; }

 private:
  void tick() {
    if (++nodes_ > budget_) throw BudgetExceeded("Berge cycle search budget exceeded", nodes_);
  }

  bool closes() {
    const EdgeId first = seq_.front();
    const EdgeId last = seq_.back();
    auto meet = intersect(view_.edge(last), view_.edge(first));
    if (meet.empty() || !matcher_.push(std::move(meet))) return false;
    bool ok = true;
    if (mode_ == CycleMode::nontrivial) {
      auto e = view_.edge(first);
      std::vector<VertexId> common(e.begin(), e.end());
      for (std::size_t i = 1; i < seq_.size() && !common.empty(); ++i) {
        common = intersect(common, view_.edge(seq_[i]));
      }
      ok = common.empty();
    }
    matcher_.pop();
    return ok;
  }

  bool extend() {
    if (seq_.size() == k_) {
      if (closes()) {
        found_ = seq_;
        return true;
      }
      return false;
    }
    const EdgeId last = seq_.back();
    const EdgeId first = seq_.front();
    ++epoch_;
    std::vector<EdgeId> candidates;
    for (VertexId v : view_.edge(last)) {
      for (EdgeId f : view_.incidence[v]) {
        if (stamp_[f] == epoch_) continue;
        stamp_[f] = epoch_;
        if (in_seq_[f]) continue;
        if (minimal_first_ && f < first) continue;
        candidates.push_back(f);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    const bool choosing_last = seq_.size() + 1 == k_;
    for (EdgeId f : candidates) {
      // Reflection: second edge id below last edge id.
      if (choosing_last && k_ >= 3 && f < seq_[1]) continue;
      if (choosing_last && intersect(view_.edge(f), view_.edge(first)).empty()) continue;
      tick();
      auto meet = intersect(view_.edge(last), view_.edge(f));
      if (!matcher_.push(std::move(meet))) continue;
      seq_.push_back(f);
      in_seq_[f] = 1;
      const bool hit = extend();
      in_seq_[f] = 0;
      seq_.pop_back();
      matcher_.pop();
      if (hit) return true;
    }
    return false;
  }

  const IncidenceView& view_;
  std::size_t k_;
  CycleMode mode_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool minimal_first_ = true;
  SdrMatcher matcher_;
  std::vector<EdgeId> seq_;
  std::vector<char> in_seq_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<EdgeId> found_;
};

BergeWitness make_witness(const IncidenceView& view, const std::vector<EdgeId>& cycle) {
  BergeWitness w;
  w.edge_ids = cycle;
  std::vector<std::vector<VertexId>> meets;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    meets.push_back(intersect(view.edge(cycle[i]), view.edge(cycle[(i + 1) % cycle.size()])));
  }
  auto reps = sdr(meets);
  if (!reps) throw std::logic_error("cycle search returned a sequence without an SDR");
  w.sdr = std::move(*reps);
  attach_exclusions(w, [&](EdgeId id) { return view.edge(id); });
  return w;
}

CycleSearchResult search(const IncidenceView& view, std::size_t k, CycleMode mode,
                         std::uint64_t budget, std::optional<EdgeId> through) {
  if (k < 2) throw std::invalid_argument("cycle length must be at least 2");
  CycleSearchResult result;
  CycleSearcher searcher(view, k, mode, budget);
  try {
    if (through) {
      if (*through >= view.num_edges()) throw std::out_of_range("edge id out of range");
      if (searcher.run_from(*through, false)) {
        result.status = SearchStatus::found;
        result.witness = make_witness(view, searcher.cycle());
      }
    } else {
      for (EdgeId first = 0; first < view.num_edges(); ++first) {
        if (searcher.run_from(first, true)) {
          result.status = SearchStatus::found;
          result.witness = make_witness(view, searcher.cycle());
          break;
        }
      }
    }
  } catch (const BudgetExceeded& e) {
    result.status = SearchStatus::budget_exhausted;
    result.nodes = e.nodes();
    return result;
  }
  result.nodes = searcher.nodes();
  return result;
}

}  // namespace

bool attach_nontrivial_evidence(const Hypergraph& h, BergeWitness& w) {
  if (w.edge_ids.empty()) return false;
  attach_exclusions(w, [&](EdgeId id) { return h.edge(id); });
  return w.nontrivial;
}

bool verify_witness(const Hypergraph& h, const BergeWitness& w, CycleMode mode) {
  const std::size_t k = w.edge_ids.size();
  for (EdgeId id : w.edge_ids) {
    if (id >= h.num_edges()) throw std::out_of_range("witness edge id out of range");
  }
  if (k < 2 || w.sdr.size() != k) return false;
  {
    auto ids = w.edge_ids;
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return false;
    auto reps = w.sdr;
    std::sort(reps.begin(), reps.end());
    if (std::adjacent_find(reps.begin(), reps.end()) != reps.end()) return false;
  }
  for (std::size_t i = 0; i < k; ++i) {
    auto a = h.edge(w.edge_ids[i]);
    auto b = h.edge(w.edge_ids[(i + 1) % k]);
    const VertexId v = w.sdr[i];
    if (!std::binary_search(a.begin(), a.end(), v) || !std::binary_search(b.begin(), b.end(), v)) {
      return false;
    }
  }
  auto first = h.edge(w.edge_ids.front());
  std::vector<VertexId> common(first.begin(), first.end());
  for (EdgeId id : w.edge_ids) common = intersect(common, h.edge(id));
  if (mode == CycleMode::nontrivial && !common.empty()) return false;
  if (w.nontrivial) {
    if (!common.empty()) return false;
    for (const auto& [v, id] : w.exclusions) {
      if (std::find(w.edge_ids.begin(), w.edge_ids.end(), id) == w.edge_ids.end()) return false;
      auto e = h.edge(id);
      if (std::binary_search(e.begin(), e.end(), v)) return false;
    }
    for (VertexId v : first) {
      auto covered = std::any_of(w.exclusions.begin(), w.exclusions.end(),
                                 [&](const auto& ex) { return ex.first == v; });
      if (!covered) return false;
    }
  }
  return true;
}

CycleSearchResult find_berge_cycle(const Hypergraph& h, std::size_t k, CycleMode mode,
                                   std::uint64_t budget) {
  auto result = search(IncidenceView::of(h), k, mode, budget, std::nullopt);
  if (result.witness && !verify_witness(h, *result.witness, mode)) {
    throw std::logic_error("cycle search produced a witness that fails verification");
  }
  return result;
}

CycleSearchResult find_berge_cycle_through(const IncidenceView& view, EdgeId through,
                                           std::size_t k, CycleMode mode,
                                           std::uint64_t budget) {
  return search(view, k, mode, budget, through);
}

FreenessResult is_free(const Hypergraph& h, const ForbiddenFamily& family, std::uint64_t budget) {
  FreenessResult out;
  for (std::size_t k : family.lengths) {
    if (k < 2) throw std::invalid_argument("forbidden family lengths must be at least 2");
  }
  for (std::size_t k : family.lengths) {
    const std::uint64_t left = budget > out.nodes ? budget - out.nodes : 0;
    auto res = find_berge_cycle(h, k, family.mode, left);
    out.nodes += res.nodes;
    if (res.status == SearchStatus::found) {
      out.status = SearchStatus::found;
      out.witness = std::move(res.witness);
      out.length = k;
      return out;
    }
    if (res.status == SearchStatus::budget_exhausted) {
      out.status = SearchStatus::budget_exhausted;
      return out;
    }
  }
  return out;
}

BergeWitness tight_path_to_witness(std::span<const VertexId> path, const Hypergraph& h,
                                   std::size_t k) {
  if (h.uniformity() != 3) throw std::invalid_argument("tight paths live in 3-graphs");
  if (k < 3) throw std::invalid_argument("tight path conversion needs k >= 3");
  if (path.size() != k + 2) throw std::invalid_argument("tight path must have k + 2 vertices");
  {
    std::vector<VertexId> sorted(path.begin(), path.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("tight path repeats a vertex");
    }
  }
  // 1-based helpers matching the path's natural indexing.
  auto v = [&](std::size_t i) { return path[i - 1]; };
  std::vector<EdgeId> e(k + 1);
  for (std::size_t i = 1; i <= k; ++i) {
    const VertexId triple[3] = {v(i), v(i + 1), v(i + 2)};
    const long id = h.find_edge(triple);
    if (id < 0) throw std::invalid_argument("tight path edge " + std::to_string(i) + " missing");
    e[i] = static_cast<EdgeId>(id);
  }

  // Ascend through e_1, e_2, e_4, ... then descend through the remaining
  // odd-indexed edges back to e_3.
  std::vector<std::size_t> order{1};
  for (std::size_t i = 2; i <= k; i += 2) order.push_back(i);
  std::size_t top = (k % 2 == 0) ? k - 1 : k;
  for (std::size_t i = top; i >= 3; i -= 2) order.push_back(i);

  std::vector<VertexId> reps{v(2)};
  if (k % 2 == 0) {
    for (std::size_t i = 4; i <= k; i += 2) reps.push_back(v(i));
    reps.push_back(v(k + 1));
    for (std::size_t i = k - 1; i >= 3; i -= 2) reps.push_back(v(i));
  } else {
    for (std::size_t i = 4; i <= k + 1; i += 2) reps.push_back(v(i));
    for (std::size_t i = k; i >= 3; i -= 2) reps.push_back(v(i));
  }

  BergeWitness w;
  for (std::size_t idx : order) w.edge_ids.push_back(e[idx]);
  w.sdr = std::move(reps);
  attach_exclusions(w, [&](EdgeId id) { return h.edge(id); });
  if (!verify_witness(h, w, CycleMode::trivial_allowed)) {
    throw std::logic_error("tight path witness failed verification");
  }
  return w;
}

}  // namespace berge
