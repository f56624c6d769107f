#include "berge/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "berge/berge_cycle.hpp"
#include "berge/constructions.hpp"
#include "berge/deg_pipeline.hpp"
#include "berge/indep.hpp"
#include "berge/peel.hpp"
#include "berge/polygons.hpp"

namespace berge {
namespace {

// Runs job(i) for i in [0, count) on a small pool; results land by index so
// output order never depends on scheduling.
template <typename Job>
void run_indexed(std::size_t count, std::size_t threads, Job job) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) job(i);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& thread : pool) thread.join();
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// Quotes a CSV field only when it needs it.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::vector<SweepSource> polygon_sources(const std::vector<std::uint64_t>& qs, std::size_t k) {
  if (k != 2 && k != 3) {
    throw std::invalid_argument("built-in hosts exist only for k = 2 and k = 3; pass a graph file");
  }
  std::vector<SweepSource> out;
  for (std::uint64_t q : qs) {
    if (k == 2) {
      out.push_back({"pp", static_cast<std::size_t>(q), incidence_pp(q)});
    } else {
      out.push_back({"gq", static_cast<std::size_t>(q), incidence_gq(q)});
    }
  }
  return out;
}

std::vector<SweepRow> sweep_theorem2(const std::vector<SweepSource>& sources, std::size_t k,
                                     std::size_t r, const std::vector<std::uint64_t>& seeds,
                                     const SweepOptions& options) {
  std::vector<SweepRow> rows(sources.size() * seeds.size());
  run_indexed(rows.size(), options.threads, [&](std::size_t i) {
    const SweepSource& source = sources[i / seeds.size()];
    SweepRow& row = rows[i];
    row.generator = source.generator;
    row.size = source.size;
    row.k = k;
    row.r = r;
    row.seed = seeds[i % seeds.size()];
    const auto start = std::chrono::steady_clock::now();
    try {
      DegPipelineResult host = deg_pipeline(source.graph, k, row.seed);
      row.m = options.m.value_or(
          default_star_count(source.graph.num_vertices(), host.report.c, k));
      ConstructionTrace trace = build_theorem2(host.graph, host.parts, k, r, row.m, row.seed);
      const Hypergraph& h = trace.hypergraph;
      row.vertices = h.num_vertices();
      row.edges = h.num_edges();
      AlphaResult alpha = alpha_exact(h, options.alpha_budget);
      row.alpha_lower = alpha.lower;
      row.alpha_upper = alpha.upper;
      row.alpha_exact = alpha.exact;
      FreenessResult freeness =
          is_free(h, ForbiddenFamily{r, {k}, CycleMode::nontrivial}, options.cycle_budget);
      row.freeness = freeness.status == SearchStatus::absent  ? "free"
                     : freeness.status == SearchStatus::found ? "not_free"
                                                              : "inconclusive";
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    row.wall_ms = elapsed_ms(start);
  });
  return rows;
}

std::string sweep_theorem2_csv(const std::vector<SweepRow>& rows, bool timing) {
  std::ostringstream out;
  out << "generator,size,k,r,m,seed,vertices,edges,alpha_lower,alpha_upper,alpha_exact,freeness";
  if (timing) out << ",wall_ms";
  out << ",error\n";
  for (const SweepRow& row : rows) {
    out << csv_field(row.generator) << ',' << row.size << ',' << row.k << ',' << row.r << ','
        << row.m << ',' << row.seed << ',' << row.vertices << ',' << row.edges << ','
        << row.alpha_lower << ',' << row.alpha_upper << ',' << (row.alpha_exact ? 1 : 0) << ','
        << row.freeness;
    if (timing) out << ',' << format_real(row.wall_ms);
    out << ',' << csv_field(row.error) << '\n';
  }
  return out.str();
}

std::vector<PipelineRow> sweep_pipeline(const std::vector<PipelineInput>& inputs, std::size_t k,
                                        const std::vector<std::uint64_t>& seeds,
                                        std::size_t threads) {
  std::vector<PipelineRow> rows(inputs.size() * seeds.size());
  run_indexed(rows.size(), threads, [&](std::size_t i) {
    const PipelineInput& input = inputs[i / seeds.size()];
    const Hypergraph& h = input.hypergraph;
    PipelineRow& row = rows[i];
    row.label = input.label;
    row.n = h.num_vertices();
    row.edges = h.num_edges();
    row.k = k;
    row.seed = seeds[i % seeds.size()];
    row.shape = std::pow(static_cast<double>(row.n), (2.0 * k - 1) / (2.0 * k));
    const auto start = std::chrono::steady_clock::now();
    try {
      PipelineReport report = theorem1_pipeline(h, k, row.seed);
      row.case_taken = report.case_taken;
      row.outcome = report.outcome;
      row.n0 = report.peel.n0;
      row.d0 = report.peel.d0;
      row.indep_size = report.independent_set.size();
      row.alpha_floor = report.alpha_floor;
      row.verified = h.is_independent(report.independent_set);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    row.wall_ms = elapsed_ms(start);
  });
  return rows;
}

std::string sweep_pipeline_csv(const std::vector<PipelineRow>& rows, bool timing) {
  std::ostringstream out;
  out << "input,n,edges,k,seed,case,outcome,n0,d0,indep_size,alpha_floor,shape,verified";
  if (timing) out << ",wall_ms";
  out << ",error\n";
  for (const PipelineRow& row : rows) {
    out << csv_field(row.label) << ',' << row.n << ',' << row.edges << ',' << row.k << ','
        << row.seed << ',' << row.case_taken << ',' << row.outcome << ',' << row.n0 << ','
        << format_real(row.d0) << ',' << row.indep_size << ',' << format_real(row.alpha_floor)
        << ',' << format_real(row.shape) << ',' << (row.verified ? 1 : 0);
    if (timing) out << ',' << format_real(row.wall_ms);
    out << ',' << csv_field(row.error) << '\n';
  }
  return out.str();
}

}  // namespace berge
