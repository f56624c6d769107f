#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berge/berge_cycle.hpp"
#include "berge/hypergraph.hpp"
#include "berge/indep.hpp"

namespace berge {

inline constexpr const char* kToolchainVersion = "bergeram 0.1.0";

// First 8 bytes of SHA-256 over the canonical serialization, as 16 hex digits.
std::string hypergraph_digest(const Hypergraph& h);

enum class CertificateStatus { claim, witness, inconclusive };
std::string to_string(CertificateStatus status);

struct RamseyClaim {
  std::size_t t = 0;  // alpha + 1
  std::size_t n = 0;  // vertices
};

struct Certificate {
  std::string version = kToolchainVersion;
  std::string digest;
  Hypergraph hypergraph;  // authoritative
  ForbiddenFamily family;
  CertificateStatus status = CertificateStatus::inconclusive;

  std::uint64_t cycle_budget = kDefaultCycleBudget;
  SearchStatus freeness = SearchStatus::budget_exhausted;
  std::optional<BergeWitness> witness;
  std::size_t witness_length = 0;
  std::uint64_t cycle_nodes = 0;

  std::uint64_t alpha_budget = kDefaultAlphaBudget;
  AlphaResult alpha;

  std::optional<RamseyClaim> claim;
  std::vector<std::uint64_t> seeds;
};

// Exhaustive freeness check plus exact alpha. A claim is made only when the
// hypergraph is free and alpha is exact; a witness refutes freeness; any
// exhausted budget leaves the certificate inconclusive.
Certificate certify(const Hypergraph& h, const ForbiddenFamily& family,
                    std::uint64_t cycle_budget = kDefaultCycleBudget,
                    std::uint64_t alpha_budget = kDefaultAlphaBudget,
                    std::vector<std::uint64_t> seeds = {});

struct VerifyReport {
  bool ok = false;
  std::vector<std::string> failures;  // one line per failed check
};

// Re-derives both evidences from the inline edge list.
VerifyReport verify_certificate(const Certificate& cert);

}  // namespace berge
