#include "berge/json_io.hpp"

#include <cmath>

namespace berge {
namespace {

std::string status_name(SearchStatus status) {
  switch (status) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::absent:
      return "absent";
    case SearchStatus::budget_exhausted:
      return "budget_exhausted";
  }
  return "budget_exhausted";
}

SearchStatus parse_status(const std::string& text) {
  if (text == "found") return SearchStatus::found;
  if (text == "absent") return SearchStatus::absent;
  if (text == "budget_exhausted") return SearchStatus::budget_exhausted;
  throw ParseError("unknown search status: " + text);
}

CertificateStatus parse_certificate_status(const std::string& text) {
  if (text == "claim") return CertificateStatus::claim;
  if (text == "witness") return CertificateStatus::witness;
  if (text == "inconclusive") return CertificateStatus::inconclusive;
  throw ParseError("unknown certificate status: " + text);
}

// Infinite or NaN values are not representable in JSON.
Json real(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json vertex_list(const Hypergraph& h, std::span<const VertexId> vertices) {
  Json out = Json::array();
  for (VertexId v : vertices) out.push_back(h.origin(v));
  return out;
}

Json raw_witness(const BergeWitness& w) {
  Json exclusions = Json::array();
  for (const auto& [v, id] : w.exclusions) exclusions.push_back({v, id});
  return {{"edge_ids", w.edge_ids},
          {"sdr", w.sdr},
          {"nontrivial", w.nontrivial},
          {"exclusions", exclusions}};
}

BergeWitness raw_witness_from(const Json& j) {
  BergeWitness w;
  w.edge_ids = j.at("edge_ids").get<std::vector<EdgeId>>();
  w.sdr = j.at("sdr").get<std::vector<VertexId>>();
  w.nontrivial = j.value("nontrivial", false);
  if (j.contains("exclusions")) {
    for (const auto& pair : j.at("exclusions")) {
      w.exclusions.emplace_back(pair.at(0).get<VertexId>(), pair.at(1).get<EdgeId>());
    }
  }
  return w;
}

Json pair_list(const std::vector<VertexPair>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

}  // namespace

Json hypergraph_json(const Hypergraph& h) {
  return {{"r", h.uniformity()}, {"n", h.num_vertices()}, {"edges", h.edge_list()}};
}

Hypergraph hypergraph_from_json(const Json& j) {
  try {
    return Hypergraph(j.at("r").get<std::size_t>(), j.at("n").get<std::size_t>(),
                      j.at("edges").get<std::vector<std::vector<VertexId>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed hypergraph: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid hypergraph: ") + e.what());
  }
}

Json witness_json(const Hypergraph& h, const BergeWitness& w, CycleMode mode) {
  Json edges = Json::array();
  for (EdgeId id : w.edge_ids) edges.push_back(vertex_list(h, h.edge(id)));
  return {{"k", w.length()},
          {"mode", to_string(mode)},
          {"edges", edges},
          {"sdr", vertex_list(h, w.sdr)},
          {"nontrivial", w.nontrivial}};
}

Json freeness_json(const Hypergraph& h, const FreenessResult& result,
                   const ForbiddenFamily& family) {
  Json out = {{"lengths", family.lengths},
              {"mode", to_string(family.mode)},
              {"status", status_name(result.status)},
              {"free", result.is_free()},
              {"nodes", result.nodes}};
  if (result.witness) out["witness"] = witness_json(h, *result.witness, family.mode);
  return out;
}

Json girth_json(const GirthReport& report) {
  Json out;
  out["girth"] = report.is_forest() ? Json(nullptr) : Json(report.girth);
  out["forest"] = report.is_forest();
  if (report.shortest_cycle) out["cycle"] = *report.shortest_cycle;
  return out;
}

Json deg_pipeline_json(const DegPipelineReport& r) {
  return {{"k", r.k},
          {"n", r.n},
          {"input_edges", r.input_edges},
          {"c", real(r.c)},
          {"threshold", real(r.threshold)},
          {"cut_edges", r.cut_edges},
          {"survivors", r.survivors},
          {"min_degree", r.min_degree},
          {"max_degree", r.max_degree},
          {"max_degree_bound", real(r.max_degree_bound)},
          {"size_bound", real(r.size_bound)},
          {"min_degree_ok", r.min_degree_ok},
          {"max_degree_ok", r.max_degree_ok},
          {"size_ok", r.size_ok},
          {"k_below_three", r.k_below_three},
          {"warnings", r.warnings}};
}

Json census_json(const CycleCensus& census, const Graph& g) {
  Json per_edge = Json::array();
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    per_edge.push_back({{"u", g.edge(i).first}, {"v", g.edge(i).second}, {"count", census.per_edge[i]}});
  }
  return {{"length", census.length},
          {"total", census.total},
          {"nodes", census.nodes},
          {"per_edge", per_edge}};
}

Json trace_json(const ConstructionTrace& trace) {
  Json placements = Json::array();
  for (const Placement& p : trace.placements) {
    Json item = {{"x", p.x}, {"image", p.image}, {"local_edges", p.local_edges}};
    if (trace.kind == "t2") {
      item["m_used"] = p.m_used;
      item["clamped"] = p.clamped;
    } else {
      item["local_seed"] = p.local_seed;
    }
    placements.push_back(std::move(item));
  }
  return {{"kind", trace.kind},
          {"k", trace.k},
          {"r", trace.r},
          {"m", trace.m},
          {"seed", trace.seed},
          {"c", real(trace.c)},
          {"host_vertices", trace.host_vertices},
          {"source_vertices", trace.source.num_vertices()},
          {"source_edges", trace.source.num_edges()},
          {"x_side", trace.x_side},
          {"y_side", trace.y_side},
          {"placements", placements},
          {"hypergraph", hypergraph_json(trace.hypergraph)},
          {"flags", trace.flags}};
}

Json jn_json(const JnReport& report) {
  return {{"n", report.graph.num_vertices()},
          {"edges", report.graph.num_edges()},
          {"max_degree", report.graph.max_degree()},
          {"max_degree_cap", report.max_degree_cap},
          {"target_edges", real(report.target_edges)},
          {"density_ratio", report.target_edges > 0
                                ? real(static_cast<double>(report.graph.num_edges()) /
                                       report.target_edges)
                                : Json(nullptr)},
          {"candidates_scanned", report.candidates_scanned}};
}

Json peel_report_json(const PeelReport& r) {
  return {{"epsilon", real(r.epsilon)},
          {"input_vertices", r.input_vertices},
          {"input_edges", r.input_edges},
          {"stages", r.stages},
          {"n0", r.n0},
          {"edges0", r.edges0},
          {"d0", real(r.d0)},
          {"max_degree0", r.max_degree0},
          {"size_bound", real(r.size_bound)},
          {"size_ok", r.size_ok},
          {"ratio_ok", r.ratio_ok}};
}

Json light_trace_json(const LightPairTrace& trace, const Hypergraph& h) {
  Json layers = Json::array();
  for (const LightLayer& layer : trace.layers) {
    Json edges = Json::array();
    for (EdgeId id : layer.edges) edges.push_back(vertex_list(h, h.edge(id)));
    layers.push_back({{"edges", edges}, {"light_pairs", pair_list(layer.light_pairs)}});
  }
  Json out = {{"k", trace.k}, {"layers", layers}, {"leftover", trace.leftover.size()}};
  out["tight_path"] = trace.tight_path ? Json(vertex_list(h, *trace.tight_path)) : Json(nullptr);
  return out;
}

Json heavy_json(const HeavyResult& result) {
  Json out = {{"chosen_layer", result.chosen_layer},
              {"layer_edges", result.layer_edges},
              {"conflict_max_degree", result.conflict_max_degree},
              {"conflict_bound", result.conflict_bound},
              {"size_bound", real(result.size_bound)},
              {"edges", result.subgraph.edge_list()},
              {"designated_pairs", pair_list(result.designated_pairs)}};
  out["tight_path"] = result.tight_path ? Json(*result.tight_path) : Json(nullptr);
  return out;
}

Json pipeline_json(const PipelineReport& r, const Hypergraph& h) {
  Json out = {{"k", r.k},
              {"n", r.n},
              {"edges", r.edges},
              {"peel", peel_report_json(r.peel)},
              {"heavy_edges", r.heavy_edges},
              {"heavy_bound", real(r.heavy_bound)},
              {"heavy_meets_4k2", r.heavy_meets_4k2},
              {"split_edges", r.split_edges},
              {"split_ratio", real(r.split_ratio)},
              {"split_meets_expectation", r.split_meets_expectation},
              {"b", real(r.b)},
              {"link_edges", r.link_edges},
              {"case", r.case_taken},
              {"outcome", r.outcome},
              {"independent_set", vertex_list(h, r.independent_set)},
              {"independent_size", r.independent_set.size()},
              {"alpha_floor", real(r.alpha_floor)},
              {"notes", r.notes}};
  if (r.witness) out["witness"] = witness_json(h, *r.witness, CycleMode::nontrivial);
  if (r.apex) {
    const ApexDiagnostic& a = *r.apex;
    out["apex"] = {{"edge", {a.edge.first, a.edge.second}},
                   {"cycles", a.cycles},
                   {"union_edges", a.union_edges},
                   {"apex", h.origin(a.apex)},
                   {"apex_degree", a.apex_degree},
                   {"max_degree0", a.max_degree0},
                   {"exceeds_max_degree", a.exceeds_max_degree}};
  }
  return out;
}

Json alpha_json(const AlphaResult& a) {
  return {{"lower", a.lower},
          {"upper", a.upper},
          {"exact", a.exact},
          {"witness", a.witness},
          {"nodes", a.nodes}};
}

Json estimate_json(const IndepProbEstimate& e) {
  return {{"s", e.s},
          {"trials", e.trials},
          {"hits", e.hits},
          {"estimate", real(e.estimate)},
          {"std_error", real(e.std_error)},
          {"half_width_99", real(e.half_width)}};
}

Json union_bound_json(const UnionBoundReport& r) {
  Json out = {{"kind", r.kind},
              {"t", r.t},
              {"vertices", r.vertices},
              {"min_degree_y", r.min_degree_y},
              {"edge_lower", real(r.edge_lower)},
              {"log_binom", real(r.log_binom)},
              {"log_prob", real(r.log_prob)},
              {"log_expected", real(r.log_expected)},
              {"conclusive", r.conclusive},
              {"notes", r.notes}};
  out["closed_form_exponent"] =
      r.closed_form_exponent ? real(*r.closed_form_exponent) : Json(nullptr);
  if (r.kind == "t3") {
    out["case_split_threshold"] = real(r.case_split_threshold);
    out["heavy_cutoff"] = real(r.heavy_cutoff);
  }
  return out;
}

Json certificate_json(const Certificate& cert) {
  Json out;
  out["format"] = "berge-ramsey-certificate";
  out["version"] = cert.version;
  out["status"] = to_string(cert.status);
  out["digest"] = cert.digest;
  out["hypergraph"] = hypergraph_json(cert.hypergraph);
  out["family"] = {{"r", cert.family.r},
                   {"lengths", cert.family.lengths},
                   {"mode", to_string(cert.family.mode)}};
  Json freeness = {{"status", status_name(cert.freeness)},
                   {"budget", cert.cycle_budget},
                   {"nodes", cert.cycle_nodes}};
  if (cert.witness) {
    freeness["length"] = cert.witness_length;
    freeness["witness"] = raw_witness(*cert.witness);
  }
  out["freeness"] = freeness;
  out["alpha"] = alpha_json(cert.alpha);
  out["alpha"]["budget"] = cert.alpha_budget;
  if (cert.claim) {
    out["claim"] = {{"t", cert.claim->t},
                    {"n", cert.claim->n},
                    {"statement", "R(" + std::to_string(cert.claim->t) + ", F) > " +
                                      std::to_string(cert.claim->n)}};
  } else {
    out["claim"] = nullptr;
  }
  out["seeds"] = cert.seeds;
  return out;
}

Certificate certificate_from_json(const Json& j) {
  try {
    Certificate cert;
    cert.version = j.at("version").get<std::string>();
    cert.status = parse_certificate_status(j.at("status").get<std::string>());
    cert.digest = j.at("digest").get<std::string>();
    cert.hypergraph = hypergraph_from_json(j.at("hypergraph"));
    const Json& family = j.at("family");
    cert.family.r = family.at("r").get<std::size_t>();
    cert.family.lengths = family.at("lengths").get<std::vector<std::size_t>>();
    cert.family.mode = parse_cycle_mode(family.at("mode").get<std::string>());
    const Json& freeness = j.at("freeness");
    cert.freeness = parse_status(freeness.at("status").get<std::string>());
    cert.cycle_budget = freeness.at("budget").get<std::uint64_t>();
    cert.cycle_nodes = freeness.value("nodes", std::uint64_t{0});
    if (freeness.contains("witness")) {
      cert.witness = raw_witness_from(freeness.at("witness"));
      cert.witness_length = freeness.value("length", cert.witness->length());
    }
    const Json& alpha = j.at("alpha");
    cert.alpha.lower = alpha.at("lower").get<std::size_t>();
    cert.alpha.upper = alpha.at("upper").get<std::size_t>();
    cert.alpha.exact = alpha.at("exact").get<bool>();
    cert.alpha.witness = alpha.at("witness").get<std::vector<VertexId>>();
    cert.alpha.nodes = alpha.value("nodes", std::uint64_t{0});
    cert.alpha_budget = alpha.value("budget", kDefaultAlphaBudget);
    if (j.contains("claim") && !j.at("claim").is_null()) {
      cert.claim = RamseyClaim{j.at("claim").at("t").get<std::size_t>(),
                               j.at("claim").at("n").get<std::size_t>()};
    }
    if (j.contains("seeds")) cert.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid certificate: ") + e.what());
  }
}

}  // namespace berge
