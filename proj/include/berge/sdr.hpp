#pragma once

#include <optional>
#include <span>
#include <vector>

#include "berge/types.hpp"

namespace berge {

// System of distinct representatives via augmenting-path bipartite matching
// (sets x elements). Sets are processed in order and candidates tried in
// ascending element order, so the answer is deterministic. Returns one
// representative per set, or nullopt when Hall's condition fails.
std::optional<std::vector<VertexId>> sdr(std::span<const std::vector<VertexId>> sets);

// Incremental variant used by the cycle search: sets are pushed and popped
// in stack order and the matcher keeps a perfect matching of the current
// stack. push() fails (and leaves the stack unchanged) iff the enlarged
// family has no SDR.
class SdrMatcher {
 public:
  explicit SdrMatcher(std::size_t universe) : owner_(universe, -1) {}

  bool push(std::vector<VertexId> set);
  void pop();
  std::size_t size() const { return sets_.size(); }

 private:
  bool augment(int set, std::vector<char>& seen);

  std::vector<int> owner_;
  std::vector<std::vector<VertexId>> sets_;
  std::vector<VertexId> match_;
  std::vector<VertexId> touched_;
};

}  // namespace berge
