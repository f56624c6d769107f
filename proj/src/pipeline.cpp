#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "berge/census.hpp"
#include "berge/peel.hpp"
#include "berge/rng.hpp"

namespace berge {
namespace {

EdgeId lift_edge(const Hypergraph& h, const Hypergraph& local, EdgeId id,
                 const std::vector<VertexId>& kept) {
  std::vector<VertexId> vertices;
  for (VertexId v : local.edge(id)) vertices.push_back(kept[v]);
  const long found = h.find_edge(vertices);
  if (found < 0) throw std::logic_error("lifted edge is missing from the input");
  return static_cast<EdgeId>(found);
}

}  // namespace

PipelineReport theorem1_pipeline(const Hypergraph& h, std::size_t k, std::uint64_t seed,
                                 const PipelineOptions& options) {
  if (h.uniformity() != 3) throw std::invalid_argument("expected a 3-uniform hypergraph");
  if (k < 2) throw std::invalid_argument("k must be at least 2");

  PipelineReport report;
  report.k = k;
  report.n = h.num_vertices();
  report.edges = h.num_edges();
  if (k < 3) report.notes.push_back("k below 3 is outside the proven range");

  if (h.empty()) {
    report.case_taken = 2;
    report.outcome = "independent_set";
    report.independent_set = random_indep_set(h, seed);
    report.peel.n0 = h.num_vertices();
    report.peel.input_vertices = h.num_vertices();
    report.alpha_floor = 2.0 * static_cast<double>(h.num_vertices()) / 3.0;
    return report;
  }

  const double epsilon =
      options.epsilon.value_or(std::exp(-std::sqrt(std::log2(static_cast<double>(h.num_vertices())))));
  BoundedRatioResult ratio = bounded_ratio_subgraph(h, epsilon);
  report.peel = ratio.report;
  const Hypergraph& h0 = ratio.graph;
  const auto& kept = ratio.kept;
  const double n0 = static_cast<double>(h0.num_vertices());
  report.alpha_floor = 2.0 * n0 / (3.0 * std::sqrt(std::max(report.peel.d0, 1.0)));

  // Whatever the case analysis finds, the caller always gets a checked set.
  {
    std::vector<VertexId> best;
    for (std::size_t t = 0; t < std::max<std::size_t>(options.indep_tries, 1); ++t) {
      auto candidate = random_indep_set(h0, split_seed(seed, 0x1000 + t));
      if (t == 0 || candidate.size() > best.size()) best = std::move(candidate);
    }
    for (VertexId& v : best) v = kept[v];
    std::sort(best.begin(), best.end());
    if (!h.is_independent(best)) throw std::logic_error("pipeline produced a dependent set");
    report.independent_set = std::move(best);
  }

  HeavyResult heavy = heavy_subgraph(h0, 2 * k);
  report.heavy_bound = heavy.size_bound;
  if (heavy.tight_path) {
    std::vector<VertexId> path;
    for (VertexId v : *heavy.tight_path) path.push_back(kept[v]);
    report.witness = tight_path_to_witness(path, h, 2 * k);
    report.outcome = "tight_path";
    report.case_taken = 0;
    report.notes.push_back("input contains a tight path of length 2k");
    return report;
  }
  const Hypergraph& h1 = heavy.subgraph;
  report.heavy_edges = h1.num_edges();
  report.heavy_meets_4k2 =
      4.0 * k * k * static_cast<double>(h1.num_edges()) >= static_cast<double>(h0.num_edges());

  ColorSplit split = color_split(h1, split_seed(seed, 0x2000), options.color_tries);
  report.split_edges = split.kept_edges.size();
  report.split_ratio = split.ratio;
  report.split_meets_expectation = split.meets_expectation;
  const Graph& link = split.link;
  report.link_edges = link.num_edges();
  report.b = n0 > 0 ? static_cast<double>(link.num_edges()) / std::pow(n0, 1.0 + 1.0 / k) : 0.0;

  if (report.b < 1.0 / epsilon) {
    report.case_taken = 2;
    report.outcome = "independent_set";
    return report;
  }

  report.case_taken = 1;
  CaseOneResult found = case_one_search(h1, split, k, report.peel.max_degree0, options.census_budget);
  if (found.total_cycles == 0) {
    report.outcome = "independent_set";
    report.notes.push_back("case 1 reached but the link graph has no 2k-cycles");
    return report;
  }
  if (found.witness) {
    BergeWitness w;
    for (EdgeId id : found.witness->edge_ids) w.edge_ids.push_back(lift_edge(h, h1, id, kept));
    for (VertexId v : found.witness->sdr) w.sdr.push_back(kept[v]);
    if (!attach_nontrivial_evidence(h, w) || !verify_witness(h, w, CycleMode::nontrivial)) {
      throw std::logic_error("lifted case-1 witness does not verify");
    }
    report.witness = std::move(w);
    report.outcome = "witness";
    return report;
  }
  ApexDiagnostic diag = *found.diagnostic;
  diag.edge = {kept[diag.edge.first], kept[diag.edge.second]};
  diag.apex = kept[diag.apex];
  report.apex = diag;
  report.outcome = "apex_diagnostic";
  return report;
}

CaseOneResult case_one_search(const Hypergraph& h, const ColorSplit& split, std::size_t k,
                              std::size_t max_degree0, std::uint64_t budget) {
  const Graph& link = split.link;
  CaseOneResult out;
  CycleCensus census = cycle_census(link, 2 * k, budget);
  out.total_cycles = census.total;
  if (census.total == 0) return out;
  std::size_t best_edge = 0;
  for (std::size_t i = 1; i < census.per_edge.size(); ++i) {
    if (census.per_edge[i] > census.per_edge[best_edge]) best_edge = i;
  }
  const GraphEdge chosen = link.edge(best_edge);

  std::vector<char> in_union(link.num_edges(), 0);
  std::uint64_t cycles = 0;
  for_each_cycle_through_edge(
      link, chosen.first, chosen.second, 2 * k,
      [&](const std::vector<VertexId>& cycle) {
        ++cycles;
        std::vector<std::size_t> ids;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
          const auto id = static_cast<std::size_t>(
              link.edge_index(cycle[i], cycle[(i + 1) % cycle.size()]));
          ids.push_back(id);
          in_union[id] = 1;
        }
        if (out.witness) return;
        const VertexId first_apex = split.apex[ids.front()];
        bool distinct = false;
        for (std::size_t id : ids) distinct = distinct || split.apex[id] != first_apex;
        if (!distinct) return;
        // Edge i carries the link pair (c_i, c_{i+1}); consecutive edges meet
        // at c_{i+1}, which becomes the representative.
        BergeWitness w;
        for (std::size_t i = 0; i < ids.size(); ++i) {
          w.edge_ids.push_back(split.link_source[ids[i]]);
          w.sdr.push_back(cycle[(i + 1) % cycle.size()]);
        }
        if (attach_nontrivial_evidence(h, w) && verify_witness(h, w, CycleMode::nontrivial)) {
          out.witness = std::move(w);
        }
      },
      budget);
  if (out.witness) return out;

  ApexDiagnostic diag;
  diag.edge = chosen;
  diag.cycles = cycles;
  diag.union_edges = static_cast<std::size_t>(std::count(in_union.begin(), in_union.end(), 1));
  const VertexId z = split.apex[best_edge];
  diag.apex = z;
  for (EdgeId id : split.kept_edges) {
    auto e = h.edge(id);
    if (std::find(e.begin(), e.end(), z) != e.end()) ++diag.apex_degree;
  }
  diag.max_degree0 = max_degree0;
  diag.exceeds_max_degree = diag.union_edges > max_degree0;
  out.diagnostic = diag;
  return out;
}

}  // namespace berge
