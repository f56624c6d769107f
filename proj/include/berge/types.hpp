#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace berge {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Thrown when an exhaustive search exceeds its node budget. Callers that
// need a tri-state answer catch this and report "inconclusive".
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what, std::uint64_t nodes)
      : std::runtime_error(what), nodes_(nodes) {}
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t nodes_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace berge
