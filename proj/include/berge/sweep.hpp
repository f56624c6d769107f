#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

// A host graph for the lower-bound sweep, labelled by generator and q (or n).
struct SweepSource {
  std::string generator;
  std::size_t size = 0;
  Graph graph;
};

// Generalized-polygon hosts: projective planes for k = 2, symplectic
// quadrangles for k = 3. Throws std::invalid_argument for other k.
std::vector<SweepSource> polygon_sources(const std::vector<std::uint64_t>& qs, std::size_t k);

struct SweepOptions {
  std::optional<std::size_t> m;           // default: ceil(8 ln n / c^k)
  std::uint64_t cycle_budget = 100'000'000;
  std::uint64_t alpha_budget = 10'000'000;
  std::size_t threads = 1;
  bool timing = false;                    // append a wall-time column
};

struct SweepRow {
  std::string generator;
  std::size_t size = 0;
  std::size_t k = 0;
  std::size_t r = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t alpha_lower = 0;
  std::size_t alpha_upper = 0;
  bool alpha_exact = false;
  std::string freeness;   // free | not_free | inconclusive
  double wall_ms = 0;
  std::string error;      // empty on success
};

// One row per (source, seed): degree pipeline, random star build, exact
// alpha and non-trivial freeness. Row failures are recorded in `error`.
std::vector<SweepRow> sweep_theorem2(const std::vector<SweepSource>& sources, std::size_t k,
                                     std::size_t r, const std::vector<std::uint64_t>& seeds,
                                     const SweepOptions& options = {});
std::string sweep_theorem2_csv(const std::vector<SweepRow>& rows, bool timing = false);

struct PipelineInput {
  std::string label;
  Hypergraph hypergraph;
};

struct PipelineRow {
  std::string label;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  int case_taken = 0;
  std::string outcome;
  std::size_t n0 = 0;
  double d0 = 0;
  std::size_t indep_size = 0;
  double alpha_floor = 0;   // 2 n0 / (3 sqrt(max(d0, 1)))
  double shape = 0;         // n^{(2k-1)/(2k)}
  bool verified = false;    // independence rechecked against the input
  double wall_ms = 0;
  std::string error;
};

std::vector<PipelineRow> sweep_pipeline(const std::vector<PipelineInput>& inputs, std::size_t k,
                                        const std::vector<std::uint64_t>& seeds,
                                        std::size_t threads = 1);
std::string sweep_pipeline_csv(const std::vector<PipelineRow>& rows, bool timing = false);

}  // namespace berge
