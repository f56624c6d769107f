#include <doctest.h>

#include "berge/certificate.hpp"
#include "berge/json_io.hpp"
#include "berge/polygons.hpp"
#include "berge/sweep.hpp"
#include "fixtures.hpp"

using namespace berge;

namespace {

Hypergraph star_build() {
  Graph g = incidence_gq(2);
  return build_theorem2(g, *two_coloring(g), 3, 3, 1, 2).hypergraph;
}

Certificate round_trip(const Certificate& cert) {
  return certificate_from_json(Json::parse(certificate_json(cert).dump()));
}

}  // namespace

TEST_SUITE("ramsey-cli") {
  TEST_CASE("certificates for small inputs") {
    Certificate loose = certify(fixtures::loose_triangle(), {3, {3}, CycleMode::nontrivial});
    CHECK(loose.status == CertificateStatus::witness);
    CHECK(loose.witness_length == 3);
    CHECK_FALSE(loose.claim.has_value());
    CHECK(verify_certificate(loose).ok);

    Certificate fano = certify(fixtures::fano(), {3, {3, 4}, CycleMode::nontrivial});
    CHECK(fano.status == CertificateStatus::witness);
    CHECK(verify_certificate(fano).ok);

    Certificate build = certify(star_build(), {3, {3}, CycleMode::nontrivial}, kDefaultCycleBudget,
                                kDefaultAlphaBudget, {2});
    CHECK(build.status == CertificateStatus::claim);
    REQUIRE(build.claim.has_value());
    CHECK(build.claim->t == build.alpha.lower + 1);
    CHECK(build.claim->n == 15);
    CHECK(verify_certificate(build).ok);
    CHECK(build.digest == hypergraph_digest(star_build()));
    CHECK(build.digest.size() == 16);

    CHECK_THROWS_AS(certify(Hypergraph(2, 3, {{0, 1}}), {3, {3}, CycleMode::nontrivial}),
                    std::invalid_argument);
  }

  TEST_CASE("budget exhaustion is inconclusive") {
    Certificate cert = certify(star_build(), {3, {3}, CycleMode::nontrivial}, 1);
    CHECK(cert.status == CertificateStatus::inconclusive);
    CHECK_FALSE(cert.claim.has_value());
  }

  TEST_CASE("certificate JSON round trip") {
    for (const Hypergraph& h : {fixtures::loose_triangle(), fixtures::fano(), star_build()}) {
      Certificate cert = certify(h, {3, {3}, CycleMode::nontrivial});
      Certificate back = round_trip(cert);
      CHECK(back.hypergraph == cert.hypergraph);
      CHECK(back.digest == cert.digest);
      CHECK(back.status == cert.status);
      CHECK(back.alpha.lower == cert.alpha.lower);
      CHECK(verify_certificate(back).ok);
      CHECK(certificate_json(back).dump() == certificate_json(cert).dump());
    }
    CHECK_THROWS_AS(certificate_from_json(Json::parse("{}")), ParseError);
    CHECK_THROWS_AS(certificate_from_json(Json::parse("[1,2]")), ParseError);
  }

  TEST_CASE("mutations break verification") {
    Certificate cert = certify(star_build(), {3, {3}, CycleMode::nontrivial});
    REQUIRE(verify_certificate(cert).ok);

    Certificate deleted = cert;
    auto edges = cert.hypergraph.edge_list();
    edges.pop_back();
    deleted.hypergraph = Hypergraph(3, cert.hypergraph.num_vertices(), edges);
    CHECK_FALSE(verify_certificate(deleted).ok);

    Certificate inflated = cert;
    inflated.alpha.lower += 1;
    inflated.alpha.upper += 1;
    inflated.claim->t += 1;
    CHECK_FALSE(verify_certificate(inflated).ok);

    Certificate tampered = cert;
    tampered.digest[0] = tampered.digest[0] == '0' ? '1' : '0';
    VerifyReport report = verify_certificate(tampered);
    CHECK_FALSE(report.ok);
    CHECK(std::find(report.failures.begin(), report.failures.end(), "digest mismatch") !=
          report.failures.end());

    Certificate forged = certify(fixtures::loose_triangle(), {3, {3}, CycleMode::nontrivial});
    forged.witness->sdr[0] = 5;
    CHECK_FALSE(verify_certificate(forged).ok);
  }

  TEST_CASE("hypergraph JSON round trip") {
    Hypergraph h = fixtures::affine_plane3();
    CHECK(hypergraph_from_json(hypergraph_json(h)) == h);
    CHECK_THROWS_AS(hypergraph_from_json(Json::parse(R"({"r":3,"n":2,"edges":[[0,1,2]]})")),
                    ParseError);
  }

  TEST_CASE("sweeps") {
    CHECK(sweep_theorem2_csv({}) ==
          "generator,size,k,r,m,seed,vertices,edges,alpha_lower,alpha_upper,alpha_exact,"
          "freeness,error\n");
    auto sources = polygon_sources({2}, 3);
    REQUIRE(sources.size() == 1);
    CHECK(sources[0].graph.num_vertices() == 30);
    CHECK_THROWS_AS(polygon_sources({2}, 4), std::invalid_argument);

    SweepOptions options;
    options.m = 1;
    auto one = sweep_theorem2(sources, 3, 3, {1, 2}, options);
    options.threads = 2;
    auto two = sweep_theorem2(sources, 3, 3, {1, 2}, options);
    REQUIRE(one.size() == 2);
    CHECK(sweep_theorem2_csv(one) == sweep_theorem2_csv(two));
    for (const SweepRow& row : one) {
      CHECK(row.error.empty());
      CHECK(row.freeness == "free");
      CHECK(row.alpha_exact);
    }

    std::vector<PipelineInput> inputs{{"fano", fixtures::fano()}, {"ag3", fixtures::affine_plane3()}};
    auto rows = sweep_pipeline(inputs, 3, {1, 2, 3}, 3);
    CHECK(rows.size() == 6);
    for (const PipelineRow& row : rows) CHECK(row.verified);
    CHECK(sweep_pipeline_csv(rows) == sweep_pipeline_csv(sweep_pipeline(inputs, 3, {1, 2, 3}, 1)));
    CHECK(sweep_pipeline_csv(rows, true).find("wall_ms") != std::string::npos);
  }
}
