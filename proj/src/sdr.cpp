#include "berge/sdr.hpp"

#include <algorithm>


namespace berge {
namespace {

bool try_assign(std::size_t set, const std::vector<std::vector<std::size_t>>& adj,
                std::vector<int>& owner, std::vector<std::size_t>& match,
                std::vector<char>& seen) {
  for (std::size_t el : adj[set]) {
    if (seen[el]) continue;
    seen[el] = 1;
    if (owner[el] < 0 ||
        try_assign(static_cast<std::size_t>(owner[el]), adj, owner, match, seen)) {
      owner[el] = static_cast<int>(set);
      match[set] = el;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<VertexId>> sdr(std::span<const std::vector<VertexId>> sets) {
  std::vector<VertexId> universe;
  for (const auto& s : sets) universe.insert(universe.end(), s.begin(), s.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

  std::vector<std::vector<std::size_t>> adj(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (VertexId v : sets[i]) {
      adj[i].push_back(static_cast<std::size_t>(
          std::lower_bound(universe.begin(), universe.end(), v) - universe.begin()));
    }
    std::sort(adj[i].begin(), adj[i].end());
    adj[i].erase(std::unique(adj[i].begin(), adj[i].end()), adj[i].end());
  }

  std::vector<int> owner(universe.size(), -1);
  std::vector<std::size_t> match(sets.size(), 0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<char> seen(universe.size(), 0);
    if (!try_assign(i, adj, owner, match, seen)) return std::nullopt;
  }
  std::vector<VertexId> reps(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) reps[i] = universe[match[i]];
  return reps;
}

bool SdrMatcher::augment(int set, std::vector<char>& seen) {
  for (VertexId v : sets_[static_cast<std::size_t>(set)]) {
    // `seen` is indexed by position in touched_, found by linear scan; sets
    // are tiny (cycle length x uniformity).
    auto it = std::find(touched_.begin(), touched_.end(), v);
    std::size_t slot;
    if (it == touched_.end()) {
      touched_.push_back(v);
      seen.push_back(0);
      slot = touched_.size() - 1;
    } else {
      slot = static_cast<std::size_t>(it - touched_.begin());
    }
    if (seen[slot]) continue;
    seen[slot] = 1;
    if (owner_[v] < 0 || augment(owner_[v], seen)) {
      owner_[v] = set;
      match_[static_cast<std::size_t>(set)] = v;
      return true;
    }
  }
  return false;
}

bool SdrMatcher::push(std::vector<VertexId> set) {
  sets_.push_back(std::move(set));
  match_.push_back(kNoVertex);
  touched_.clear();
  std::vector<char> seen;
  if (augment(static_cast<int>(sets_.size() - 1), seen)) return true;
  // A failed augmenting search does not modify the matching.
  sets_.pop_back();
  match_.pop_back();
  return false;
}

void SdrMatcher::pop() {
  const VertexId v = match_.back();
  if (v != kNoVertex) owner_[v] = -1;
  sets_.pop_back();
  match_.pop_back();
}

}  // namespace berge
