#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "berge/hypergraph.hpp"
#include "berge/types.hpp"

namespace berge {

// Whether a Berge cycle must also have empty common intersection.
enum class CycleMode { trivial_allowed, nontrivial };

std::string to_string(CycleMode mode);
CycleMode parse_cycle_mode(const std::string& text);

// An ordered cycle e_1..e_k of distinct edges with representatives
// sdr[i] in e_i ∩ e_{i+1} (indices mod k), all distinct. When `nontrivial`
// is set, `exclusions` lists for every vertex w of e_1 an edge of the cycle
// that misses w, which certifies that the common intersection is empty.
struct BergeWitness {
  std::vector<EdgeId> edge_ids;
  std::vector<VertexId> sdr;
  bool nontrivial = false;
  std::vector<std::pair<VertexId, EdgeId>> exclusions;

  std::size_t length() const { return edge_ids.size(); }
};

// B_k (trivial_allowed) or the non-trivial family for each listed k >= 2.
struct ForbiddenFamily {
  std::size_t r = 3;
  std::vector<std::size_t> lengths;
  CycleMode mode = CycleMode::nontrivial;
};

enum class SearchStatus { found, absent, budget_exhausted };

struct CycleSearchResult {
  SearchStatus status = SearchStatus::absent;
  std::optional<BergeWitness> witness;
  std::uint64_t nodes = 0;
};

struct FreenessResult {
  SearchStatus status = SearchStatus::absent;  // absent == free
  std::optional<BergeWitness> witness;
  std::size_t length = 0;  // cycle length of the witness, when found
  std::uint64_t nodes = 0;
  bool is_free() const { return status == SearchStatus::absent; }
};

inline constexpr std::uint64_t kDefaultCycleBudget = 100'000'000;

// Recomputes the nontrivial flag and exclusion evidence of `w` from `h`.
// Returns the new flag.
bool attach_nontrivial_evidence(const Hypergraph& h, BergeWitness& w);

// Checks every witness invariant against `h`; in nontrivial mode the empty
// common intersection is recomputed rather than taken from the evidence.
// Throws std::out_of_range when an edge id is out of range.
bool verify_witness(const Hypergraph& h, const BergeWitness& w, CycleMode mode);

// Exhaustive backtracking over edge sequences whose first edge is the
// smallest id of the cycle and whose second edge id is below the last one
// (rotation/reflection symmetry breaking). Partial SDR feasibility prunes.
CycleSearchResult find_berge_cycle(const Hypergraph& h, std::size_t k, CycleMode mode,
                                   std::uint64_t budget = kDefaultCycleBudget);

// Lightweight incidence view so callers that grow a hypergraph edge by edge
// can run the search without rebuilding a Hypergraph.
struct IncidenceView {
  std::size_t r = 0;
  std::size_t n = 0;
  std::span<const VertexId> flat;
  std::span<const std::vector<EdgeId>> incidence;

  std::size_t num_edges() const { return r == 0 ? 0 : flat.size() / r; }
  std::span<const VertexId> edge(std::size_t i) const { return flat.subspan(i * r, r); }

  static IncidenceView of(const Hypergraph& h) {
    return {h.uniformity(), h.num_vertices(), h.flat_edges(), h.incidence_lists()};
  }
};

// Search restricted to cycles that use `through` as one of their edges.
// The returned witness is not self-verified (the view has no Hypergraph).
CycleSearchResult find_berge_cycle_through(const IncidenceView& view, EdgeId through,
                                           std::size_t k, CycleMode mode,
                                           std::uint64_t budget = kDefaultCycleBudget);

FreenessResult is_free(const Hypergraph& h, const ForbiddenFamily& family,
                       std::uint64_t budget = kDefaultCycleBudget);

// Builds the explicit Berge k-cycle carried by a tight path v_1..v_{k+2}
// with edges e_i = {v_i, v_{i+1}, v_{i+2}}. The edge order alternates
// e_1, e_2, e_4, ... and back down through the odd-indexed edges; the
// representatives are the matching v's. For k >= 4 the cycle is
// non-trivial; for k = 3 all three edges share v_3 and the flag is cleared.
// Throws std::invalid_argument on a missing edge, repeated vertex or wrong
// path length.
BergeWitness tight_path_to_witness(std::span<const VertexId> path, const Hypergraph& h,
                                   std::size_t k);

}  // namespace berge
