#include "berge/certificate.hpp"

#include <openssl/sha.h>

#include <algorithm>
#include <cstdio>

#include "berge/edge_list.hpp"

namespace berge {

std::string hypergraph_digest(const Hypergraph& h) {
  const std::string text = serialize(h);
  unsigned char hash[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(text.data()), text.size(), hash);
  std::string out;
  char byte[3];
  for (int i = 0; i < 8; ++i) {
    std::snprintf(byte, sizeof byte, "%02x", hash[i]);
    out += byte;
  }
  return out;
}

std::string to_string(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::claim:
      return "claim";
    case CertificateStatus::witness:
      return "witness";
    case CertificateStatus::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Certificate certify(const Hypergraph& h, const ForbiddenFamily& family,
                    std::uint64_t cycle_budget, std::uint64_t alpha_budget,
                    std::vector<std::uint64_t> seeds) {
  if (family.r != h.uniformity()) {
    throw std::invalid_argument("family uniformity does not match the hypergraph");
  }
  Certificate cert;
  cert.hypergraph = h;
  cert.digest = hypergraph_digest(h);
  cert.family = family;
  cert.seeds = std::move(seeds);
  cert.cycle_budget = cycle_budget;
  cert.alpha_budget = alpha_budget;

  FreenessResult freeness = is_free(h, family, cycle_budget);
  cert.freeness = freeness.status;
  cert.witness = freeness.witness;
  cert.witness_length = freeness.length;
  cert.cycle_nodes = freeness.nodes;

  cert.alpha = alpha_exact(h, alpha_budget);

  if (freeness.status == SearchStatus::found) {
    cert.status = CertificateStatus::witness;
  } else if (freeness.status == SearchStatus::absent && cert.alpha.exact) {
    cert.status = CertificateStatus::claim;
    cert.claim = RamseyClaim{cert.alpha.lower + 1, h.num_vertices()};
  } else {
    cert.status = CertificateStatus::inconclusive;
  }
  return cert;
}

VerifyReport verify_certificate(const Certificate& cert) {
  VerifyReport report;
  auto fail = [&](std::string why) { report.failures.push_back(std::move(why)); };
  const Hypergraph& h = cert.hypergraph;

  if (hypergraph_digest(h) != cert.digest) fail("digest mismatch");
  if (cert.family.r != h.uniformity()) fail("family uniformity mismatch");

  // Freeness evidence.
  if (cert.freeness == SearchStatus::found) {
    if (!cert.witness) {
      fail("witness missing");
    } else {
      bool valid = false;
      try {
        valid = verify_witness(h, *cert.witness, cert.family.mode) &&
                std::find(cert.family.lengths.begin(), cert.family.lengths.end(),
                          cert.witness->length()) != cert.family.lengths.end();
      } catch (const std::exception&) {
        valid = false;
      }
      if (!valid) fail("witness does not verify");
    }
  } else if (cert.freeness == SearchStatus::absent) {
    FreenessResult again = is_free(h, cert.family, cert.cycle_budget);
    if (again.status != SearchStatus::absent) fail("freeness does not reproduce");
  }

  // Alpha evidence.
  const AlphaResult& alpha = cert.alpha;
  bool witness_in_range = std::all_of(alpha.witness.begin(), alpha.witness.end(),
                                      [&](VertexId v) { return v < h.num_vertices(); });
  std::vector<VertexId> sorted = alpha.witness;
  std::sort(sorted.begin(), sorted.end());
  const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!witness_in_range || !distinct || !h.is_independent(sorted)) {
    fail("alpha witness is not an independent set");
  }
  if (alpha.witness.size() != alpha.lower) fail("alpha witness size mismatch");
  if (alpha.upper < alpha.lower) fail("alpha bracket inverted");
  if (alpha.exact && alpha.upper != alpha.lower) fail("alpha marked exact with a bracket");
  if (alpha.exact) {
    AlphaResult again = alpha_exact(h, cert.alpha_budget);
    if (!again.exact || again.lower != alpha.lower) fail("alpha does not reproduce");
  }

  // Claim consistency.
  const bool should_claim = cert.freeness == SearchStatus::absent && alpha.exact;
  CertificateStatus expected = cert.freeness == SearchStatus::found ? CertificateStatus::witness
                               : should_claim                       ? CertificateStatus::claim
                                                                    : CertificateStatus::inconclusive;
  if (cert.status != expected) fail("status inconsistent with evidence");
  if (should_claim) {
    if (!cert.claim) {
      fail("claim missing");
    } else if (cert.claim->t != alpha.lower + 1 || cert.claim->n != h.num_vertices()) {
      fail("claim fields inconsistent");
    }
  } else if (cert.claim) {
    fail("claim present without supporting evidence");
  }

  report.ok = report.failures.empty();
  return report;
}

}  // namespace berge
