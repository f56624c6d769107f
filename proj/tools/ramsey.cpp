// ramsey: command-line front end for the Berge-cycle Ramsey toolkit.
//
// Exit codes: 0 success or claim, 1 witness found (input not free),
// 2 inconclusive (budget exhausted or verification failed), 3 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "berge/berge_cycle.hpp"
#include "berge/census.hpp"
#include "berge/certificate.hpp"
#include "berge/constructions.hpp"
#include "berge/deg_pipeline.hpp"
#include "berge/edge_list.hpp"
#include "berge/girth.hpp"
#include "berge/indep.hpp"
#include "berge/json_io.hpp"
#include "berge/peel.hpp"
#include "berge/polygons.hpp"
#include "berge/sweep.hpp"

namespace {

using namespace berge;

constexpr int kExitOk = 0;
constexpr int kExitWitness = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInput = 3;

struct Globals {
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget;
  std::string format = "json";
  std::string out;
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_text_file(g.out, text);
  }
}

void emit_json(const Globals& g, const Json& j) { emit(g, j.dump(2) + "\n"); }

// Flat "key: value" rendering of a JSON object for --format text.
std::string as_text(const Json& j) {
  std::ostringstream out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_structured()) {
      out << it.key() << ": " << it.value().dump() << '\n';
    } else {
      out << it.key() << ": " << (it.value().is_string() ? it.value().get<std::string>()
                                                         : it.value().dump())
          << '\n';
    }
  }
  return out.str();
}

void emit_report(const Globals& g, const Json& j) {
  if (g.format == "text") {
    emit(g, as_text(j));
  } else {
    emit_json(g, j);
  }
}

std::vector<std::uint64_t> seed_list(const std::vector<std::uint64_t>& given, std::uint64_t fallback) {
  return given.empty() ? std::vector<std::uint64_t>{fallback} : given;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berge-cycle Ramsey toolkit: constructions, detectors, certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "Root random seed");
  app.add_option("--budget", globals.budget, "Node budget for exhaustive searches");
  app.add_option("--format", globals.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", globals.out, "Write output to this path");

  int exit_code = kExitOk;

  // gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate a high-girth host graph");
  gen->require_subcommand(1);
  std::uint64_t gen_q = 2;
  auto* gen_pp = gen->add_subcommand("pp", "Projective plane incidence graph (girth 6)");
  gen_pp->add_option("--q", gen_q, "Prime order")->required();
  auto* gen_gq = gen->add_subcommand("gq", "Generalized quadrangle incidence graph (girth 8)");
  gen_gq->add_option("--q", gen_q, "Prime order")->required();
  std::size_t gen_left = 0, gen_right = 0, gen_girth = 6, gen_max_degree = 0;
  auto* gen_greedy = gen->add_subcommand("greedy", "Random bipartite graph with a girth floor");
  gen_greedy->add_option("--left", gen_left)->required();
  gen_greedy->add_option("--right", gen_right)->required();
  gen_greedy->add_option("--girth", gen_girth, "Minimum girth")->required();
  gen_greedy->add_option("--max-degree", gen_max_degree, "Degree cap, 0 for none");
  gen_pp->callback([&] { emit(globals, serialize(incidence_pp(gen_q))); });
  gen_gq->callback([&] { emit(globals, serialize(incidence_gq(gen_q))); });
  gen_greedy->callback([&] {
    emit(globals, serialize(random_high_girth_bipartite(gen_left, gen_right, gen_girth,
                                                        globals.seed, gen_max_degree)));
  });

  // girth -------------------------------------------------------------
  std::string girth_file;
  auto* girth_cmd = app.add_subcommand("girth", "Exact girth of a graph");
  girth_cmd->add_option("file", girth_file)->required();
  girth_cmd->callback([&] { emit_report(globals, girth_json(girth(read_graph_file(girth_file)))); });

  // degpipe -----------------------------------------------------------
  std::string deg_file, deg_graph_out;
  std::size_t deg_k = 3;
  auto* degpipe = app.add_subcommand("degpipe", "Max cut plus min-degree peel of a high-girth graph");
  degpipe->add_option("file", deg_file)->required();
  degpipe->add_option("--k", deg_k)->required();
  degpipe->add_option("--graph-out", deg_graph_out, "Write the bipartite core here");
  degpipe->callback([&] {
    DegPipelineResult result = deg_pipeline(read_graph_file(deg_file), deg_k, globals.seed);
    if (!deg_graph_out.empty()) write_text_file(deg_graph_out, serialize(result.graph));
    emit_report(globals, deg_pipeline_json(result.report));
  });

  // build -------------------------------------------------------------
  auto* build = app.add_subcommand("build", "Random lower-bound constructions");
  build->require_subcommand(1);
  std::string build_graph, build_trace;
  std::size_t build_k = 3, build_r = 3, build_n = 0;
  std::optional<std::size_t> build_m;
  auto* build_t2 = build->add_subcommand("t2", "Random star systems over a high-girth graph");
  build_t2->add_option("--graph", build_graph)->required();
  build_t2->add_option("--k", build_k)->required();
  build_t2->add_option("--r", build_r)->required();
  build_t2->add_option("--m", build_m, "Stars per neighbourhood (default from the density)");
  build_t2->add_option("--trace", build_trace, "Write the construction trace JSON here");
  auto* build_t3 = build->add_subcommand("t3", "Random linear triple systems over a girth > 8 graph");
  build_t3->add_option("--graph", build_graph)->required();
  build_t3->add_option("--trace", build_trace, "Write the construction trace JSON here");
  auto* build_jn = build->add_subcommand("jn", "Greedy linear {B2,B3,B4}-free triple system");
  build_jn->add_option("--n", build_n)->required();
  build_jn->add_option("--trace", build_trace, "Write the supplier report JSON here");
  auto finish_build = [&](const ConstructionTrace& trace) {
    if (!build_trace.empty()) write_text_file(build_trace, trace_json(trace).dump(2) + "\n");
    emit(globals, serialize(trace.hypergraph));
  };
  build_t2->callback([&] {
    Graph host = read_graph_file(build_graph);
    DegPipelineResult core = deg_pipeline(host, build_k, globals.seed);
    const std::size_t m =
        build_m.value_or(default_star_count(host.num_vertices(), core.report.c, build_k));
    ConstructionTrace trace =
        build_theorem2(core.graph, core.parts, build_k, build_r, m, globals.seed);
    trace.c = core.report.c;
    trace.host_vertices = host.num_vertices();
    finish_build(trace);
  });
  build_t3->callback([&] {
    Graph host = read_graph_file(build_graph);
    DegPipelineResult core = deg_pipeline(host, 4, globals.seed);
    ConstructionTrace trace = build_theorem3(core.graph, core.parts, globals.seed);
    trace.c = core.report.c;
    trace.host_vertices = host.num_vertices();
    finish_build(trace);
  });
  build_jn->callback([&] {
    JnReport report = jn_supplier(build_n, globals.seed);
    if (!build_trace.empty()) write_text_file(build_trace, jn_json(report).dump(2) + "\n");
    emit(globals, serialize(report.graph));
  });

  // detect ------------------------------------------------------------
  std::string detect_file, detect_mode = "nontrivial";
  std::vector<std::size_t> detect_k;
  auto* detect = app.add_subcommand("detect", "Exhaustive Berge cycle search");
  detect->add_option("file", detect_file)->required();
  detect->add_option("--k", detect_k, "Cycle length(s)")->required()->delimiter(',');
  detect->add_option("--mode", detect_mode)
      ->check(CLI::IsMember({"nontrivial", "trivial", "trivial-allowed"}));
  detect->callback([&] {
    Hypergraph h = read_hypergraph_file(detect_file);
    ForbiddenFamily family{h.uniformity(), detect_k, parse_cycle_mode(detect_mode)};
    FreenessResult result = is_free(h, family, globals.budget.value_or(kDefaultCycleBudget));
    emit_report(globals, freeness_json(h, result, family));
    if (result.status == SearchStatus::found) exit_code = kExitWitness;
    if (result.status == SearchStatus::budget_exhausted) exit_code = kExitInconclusive;
  });

  // alpha -------------------------------------------------------------
  std::string alpha_file;
  auto* alpha = app.add_subcommand("alpha", "Exact independence number (branch and bound)");
  alpha->add_option("file", alpha_file)->required();
  alpha->callback([&] {
    AlphaResult result =
        alpha_exact(read_hypergraph_file(alpha_file), globals.budget.value_or(kDefaultAlphaBudget));
    emit_report(globals, alpha_json(result));
    if (!result.exact) exit_code = kExitInconclusive;
  });

  // indep-prob --------------------------------------------------------
  std::string prob_file;
  std::size_t prob_s = 0;
  std::uint64_t prob_trials = 100000;
  auto* prob = app.add_subcommand("indep-prob", "Monte Carlo probability that an s-set is independent");
  prob->add_option("file", prob_file)->required();
  prob->add_option("--s", prob_s)->required();
  prob->add_option("--trials", prob_trials);
  prob->callback([&] {
    emit_report(globals, estimate_json(indep_prob_mc(read_hypergraph_file(prob_file), prob_s,
                                                     prob_trials, globals.seed)));
  });

  // census ------------------------------------------------------------
  std::string census_file;
  std::size_t census_len = 4;
  std::vector<VertexId> census_edge;
  auto* census = app.add_subcommand("census", "Exact cycle counts of a graph");
  census->add_option("file", census_file)->required();
  census->add_option("--len", census_len, "Cycle length")->required();
  census->add_option("--edge", census_edge, "Restrict to cycles through u,v")
      ->expected(2)
      ->delimiter(',');
  census->callback([&] {
    Graph g = read_graph_file(census_file);
    const std::uint64_t budget = globals.budget.value_or(kDefaultCensusBudget);
    if (census_edge.size() == 2) {
      EdgeCycles through = cycles_through_edge(g, census_edge[0], census_edge[1], census_len, budget);
      Json j = {{"length", census_len},
                {"edge", census_edge},
                {"count", through.count},
                {"union_edges", through.union_graph.num_edges()},
                {"nodes", through.nodes}};
      if (census_len % 2 == 0 && census_len >= 4) {
        BigcpnReport check = bigcpn_check(g, census_edge[0], census_edge[1], census_len / 2, budget);
        j["union_bound"] = check.bound;
        j["union_bound_holds"] = check.holds;
      }
      emit_report(globals, j);
    } else {
      emit_report(globals, census_json(cycle_census(g, census_len, budget), g));
    }
  });

  // peel --------------------------------------------------------------
  auto* peel = app.add_subcommand("peel", "Peeling stages of the upper-bound argument");
  peel->require_subcommand(1);
  std::string peel_file;
  double peel_eps = 0.25;
  std::size_t peel_k = 3;
  auto* peel_ratio = peel->add_subcommand("ratio", "Bounded max/average degree subgraph");
  peel_ratio->add_option("file", peel_file)->required();
  peel_ratio->add_option("--eps", peel_eps)->required();
  auto* peel_heavy = peel->add_subcommand("heavy", "Light-pair layers and codegree-1 subgraph");
  peel_heavy->add_option("file", peel_file)->required();
  peel_heavy->add_option("--k", peel_k)->required();
  peel_ratio->callback([&] {
    Hypergraph h = read_hypergraph_file(peel_file);
    BoundedRatioResult result = bounded_ratio_subgraph(h, peel_eps);
    Json j = peel_report_json(result.report);
    j["kept"] = result.kept;
    emit_report(globals, j);
  });
  peel_heavy->callback([&] {
    Hypergraph h = read_hypergraph_file(peel_file);
    Json j = {{"trace", light_trace_json(light_pair_peel(h, peel_k), h)}};
    HeavyResult heavy = heavy_subgraph(h, peel_k);
    j["heavy"] = heavy_json(heavy);
    if (heavy.tight_path) {
      BergeWitness w = tight_path_to_witness(*heavy.tight_path, h, peel_k);
      j["witness"] = witness_json(h, w, w.nontrivial ? CycleMode::nontrivial
                                                     : CycleMode::trivial_allowed);
      exit_code = kExitWitness;
    }
    emit_report(globals, j);
  });

  // pipeline ----------------------------------------------------------
  std::string pipe_file;
  std::size_t pipe_k = 3;
  std::optional<double> pipe_eps;
  auto* pipeline = app.add_subcommand("pipeline", "Full peeling pipeline on a 3-graph");
  pipeline->add_option("file", pipe_file)->required();
  pipeline->add_option("--k", pipe_k)->required();
  pipeline->add_option("--eps", pipe_eps, "Override the degree-ratio epsilon");
  pipeline->callback([&] {
    Hypergraph h = read_hypergraph_file(pipe_file);
    PipelineOptions options;
    options.epsilon = pipe_eps;
    if (globals.budget) options.census_budget = *globals.budget;
    PipelineReport report = theorem1_pipeline(h, pipe_k, globals.seed, options);
    emit_report(globals, pipeline_json(report, h));
    if (report.witness) exit_code = kExitWitness;
  });

  // certify / verify --------------------------------------------------
  std::string cert_file, cert_mode = "nontrivial";
  std::vector<std::size_t> cert_k;
  auto* certify_cmd = app.add_subcommand("certify", "Ramsey lower-bound certificate for a hypergraph");
  certify_cmd->add_option("file", cert_file)->required();
  certify_cmd->add_option("--k", cert_k, "Forbidden cycle length(s)")->required()->delimiter(',');
  certify_cmd->add_option("--mode", cert_mode)
      ->check(CLI::IsMember({"nontrivial", "trivial", "trivial-allowed"}));
  certify_cmd->callback([&] {
    Hypergraph h = read_hypergraph_file(cert_file);
    ForbiddenFamily family{h.uniformity(), cert_k, parse_cycle_mode(cert_mode)};
    Certificate cert = certify(h, family, globals.budget.value_or(kDefaultCycleBudget),
                               globals.budget.value_or(kDefaultAlphaBudget), {globals.seed});
    emit_json(globals, certificate_json(cert));
    if (cert.status == CertificateStatus::witness) exit_code = kExitWitness;
    if (cert.status == CertificateStatus::inconclusive) exit_code = kExitInconclusive;
  });

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "Re-check a certificate from its inline edge list");
  verify->add_option("file", verify_file)->required();
  verify->callback([&] {
    std::ifstream in(verify_file);
    if (!in) throw ParseError("cannot open " + verify_file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("certificate is not JSON: ") + e.what());
    }
    VerifyReport report = verify_certificate(certificate_from_json(j));
    emit_report(globals, Json{{"valid", report.ok}, {"failures", report.failures}});
    if (!report.ok) exit_code = kExitInconclusive;
  });

  // sweep -------------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "Seeded experiment sweeps (CSV)");
  sweep->require_subcommand(1);
  std::vector<std::uint64_t> sweep_q, sweep_seeds;
  std::vector<std::string> sweep_graphs, sweep_inputs;
  std::size_t sweep_k = 3, sweep_r = 3, sweep_threads = 1;
  std::optional<std::size_t> sweep_m;
  bool sweep_timing = false;
  auto* sweep_t2 = sweep->add_subcommand("t2", "Lower-bound builds over generated or given hosts");
  sweep_t2->add_option("--q", sweep_q, "Prime orders of the built-in hosts")->delimiter(',');
  sweep_t2->add_option("--graph", sweep_graphs, "Host graph files");
  sweep_t2->add_option("--k", sweep_k)->required();
  sweep_t2->add_option("--r", sweep_r);
  sweep_t2->add_option("--m", sweep_m);
  sweep_t2->add_option("--seeds", sweep_seeds)->delimiter(',');
  sweep_t2->add_option("--threads", sweep_threads);
  sweep_t2->add_flag("--timing", sweep_timing, "Append a wall-time column");
  auto* sweep_pipe = sweep->add_subcommand("pipeline", "Peeling pipeline over hypergraph files");
  sweep_pipe->add_option("inputs", sweep_inputs, "Hypergraph files");
  sweep_pipe->add_option("--k", sweep_k)->required();
  sweep_pipe->add_option("--seeds", sweep_seeds)->delimiter(',');
  sweep_pipe->add_option("--threads", sweep_threads);
  sweep_pipe->add_flag("--timing", sweep_timing, "Append a wall-time column");
  sweep_t2->callback([&] {
    std::vector<SweepSource> sources = sweep_q.empty() ? std::vector<SweepSource>{}
                                                       : polygon_sources(sweep_q, sweep_k);
    for (const std::string& path : sweep_graphs) {
      Graph g = read_graph_file(path);
      sources.push_back({path, g.num_vertices(), std::move(g)});
    }
    SweepOptions options;
    options.m = sweep_m;
    options.threads = sweep_threads;
    options.timing = sweep_timing;
    if (globals.budget) options.cycle_budget = options.alpha_budget = *globals.budget;
    auto rows = sweep_theorem2(sources, sweep_k, sweep_r, seed_list(sweep_seeds, globals.seed), options);
    emit(globals, sweep_theorem2_csv(rows, sweep_timing));
  });
  sweep_pipe->callback([&] {
    std::vector<PipelineInput> inputs;
    for (const std::string& path : sweep_inputs) inputs.push_back({path, read_hypergraph_file(path)});
    auto rows = sweep_pipeline(inputs, sweep_k, seed_list(sweep_seeds, globals.seed), sweep_threads);
    emit(globals, sweep_pipeline_csv(rows, sweep_timing));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "inconclusive: " << e.what() << '\n';
    return kExitInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return exit_code;
}
