// Copyright 2026 The ssbm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end: generate instances, run the estimators and the
// detection test on one graph, run sweeps and the oracle suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ssbm/census.h"
#include "ssbm/csdp.h"
#include "ssbm/errors.h"
#include "ssbm/experiment.h"
#include "ssbm/graph_io.h"
#include "ssbm/model.h"
#include "ssbm/oracle_suite.h"
#include "ssbm/sdp.h"
#include "ssbm/serialize.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitOracle = 3;

struct ModelFlags {
  std::uint32_t n = 1000;
  double a = 5.0;
  double b = 2.0;
  double rho = 0.1;
  std::uint64_t seed = 1;
  std::string graph;
  bool a_set = false;
  bool b_set = false;
};

struct SolverFlags {
  int rank = 0;
  double tol = 1e-6;
  int max_sweeps = 2000;
  int restarts = 3;
};

void add_model_flags(CLI::App* cmd, ModelFlags& f, bool with_graph) {
  cmd->add_option("--n", f.n, "Number of vertices (even)");
  cmd->add_option_function<double>(
      "--a", [&f](double v) { f.a = v; f.a_set = true; },
      "Within-community rate: edge probability a/n");
  cmd->add_option_function<double>(
      "--b", [&f](double v) { f.b = v; f.b_set = true; },
      "Across-community rate: edge probability b/n");
  cmd->add_option("--rho", f.rho, "Fraction of revealed labels");
  cmd->add_option("--seed", f.seed, "Random seed");
  if (with_graph) {
    cmd->add_option("--graph", f.graph,
                    "Read the instance from a file instead of sampling it");
  }
}

void add_solver_flags(CLI::App* cmd, SolverFlags& f) {
  cmd->add_option("--rank", f.rank, "Factor width (0 picks a default)");
  cmd->add_option("--tol", f.tol, "Relative sweep improvement to stop at");
  cmd->add_option("--max-sweeps", f.max_sweeps, "Sweep limit per restart");
  cmd->add_option("--restarts", f.restarts, "Random restarts");
}

ssbm::SolverConfig solver_config(const SolverFlags& f, std::uint64_t seed) {
  ssbm::SolverConfig cfg;
  cfg.rank = f.rank;
  cfg.tol = f.tol;
  cfg.max_sweeps = f.max_sweeps;
  cfg.restarts = f.restarts;
  cfg.seed = seed;
  cfg.validate();
  return cfg;
}

ssbm::Instance obtain_instance(const ModelFlags& f) {
  if (!f.graph.empty()) return ssbm::load_instance(f.graph);
  ssbm::ModelParams p{f.n, f.a, f.b, f.rho, f.seed};
  return ssbm::sample_instance(p);
}

// Centering degree: (a + b)/2 when given, otherwise the empirical average
// degree of a loaded graph.
double centering_degree(const ModelFlags& f, const ssbm::Graph& g) {
  if (f.graph.empty() || (f.a_set && f.b_set)) return 0.5 * (f.a + f.b);
  return g.num_vertices() == 0
             ? 0.0
             : 2.0 * static_cast<double>(g.num_edges()) / g.num_vertices();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream file(out);
  file << text << '\n';
  if (!file) throw ssbm::IoError("cannot write " + out);
}

json with_overlap(const std::string& doc, double overlap) {
  json j = json::parse(doc);
  j["overlap"] = std::isfinite(overlap) ? json(overlap) : json(nullptr);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-supervised community detection on the planted bisection "
               "model"};
  app.require_subcommand(1);

  ModelFlags model;
  SolverFlags solver;
  std::string out;
  std::uint32_t t = 1;

  auto* generate = app.add_subcommand("generate", "Sample an instance");
  add_model_flags(generate, model, false);
  generate->add_option("--out", out, "Output file (default: stdout)");

  auto* census = app.add_subcommand("census", "Census estimate at depth t");
  add_model_flags(census, model, true);
  census->add_option("--t", t, "Census depth")->check(CLI::PositiveNumber);
  census->add_option("--out", out, "Output file (default: stdout)");

  auto* sdp = app.add_subcommand("sdp", "Unsupervised SDP estimate");
  add_model_flags(sdp, model, true);
  add_solver_flags(sdp, solver);
  sdp->add_option("--out", out, "Output file (default: stdout)");

  auto* csdp = app.add_subcommand("csdp", "Constrained SDP estimate");
  add_model_flags(csdp, model, true);
  add_solver_flags(csdp, solver);
  csdp->add_option("--out", out, "Output file (default: stdout)");

  std::optional<double> delta;
  auto* test = app.add_subcommand(
      "test", "CSDP detection test; --a and --b are the hypothesised rates");
  add_model_flags(test, model, true);
  add_solver_flags(test, solver);
  test->add_option("--delta", delta, "Threshold margin (default (a-b)/40)");
  test->add_option("--out", out, "Output file (default: stdout)");

  std::string config_path;
  std::string kind;
  std::vector<std::uint32_t> sweep_n;
  std::vector<double> sweep_a, sweep_b, sweep_rho;
  std::optional<std::uint32_t> reps, sweep_t, threads;
  std::optional<std::uint64_t> sweep_seed;
  std::optional<int> rank, max_sweeps, restarts;
  std::optional<double> tol;
  std::optional<std::string> out_dir;
  bool timing = false;
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep");
  sweep->add_option("--config", config_path, "JSON experiment config");
  sweep->add_option("--kind", kind,
                    "census-sweep, phase-grid, detection-boxes, "
                    "sandwich-audit or oracle-suite");
  sweep->add_option("--n", sweep_n, "Grid of n");
  sweep->add_option("--a", sweep_a, "Grid of a");
  sweep->add_option("--b", sweep_b, "Grid of b");
  sweep->add_option("--rho", sweep_rho, "Grid of rho");
  sweep->add_option("--reps", reps, "Replications per cell");
  sweep->add_option("--t", sweep_t, "Census depth");
  sweep->add_option("--seed", sweep_seed, "Base seed");
  sweep->add_option("--threads", threads, "Worker threads (0: all cores)");
  sweep->add_option("--rank", rank, "Factor width");
  sweep->add_option("--tol", tol, "Solver tolerance");
  sweep->add_option("--max-sweeps", max_sweeps, "Sweep limit per restart");
  sweep->add_option("--restarts", restarts, "Random restarts");
  sweep->add_option("--out", out_dir, "Output directory");
  sweep->add_flag("--timing", timing, "Record runtime_ms");

  std::uint64_t oracle_seed = ssbm::OracleOptions{}.seed;
  auto* oracles = app.add_subcommand("oracles", "Run the exact-oracle suite");
  oracles->add_option("--seed", oracle_seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*generate) {
      ssbm::ModelParams p{model.n, model.a, model.b, model.rho, model.seed};
      const ssbm::Instance inst = ssbm::sample_instance(p);
      if (out.empty()) {
        ssbm::write_instance(std::cout, inst.graph, inst.revealed);
      } else {
        ssbm::save_instance(out, inst.graph, inst.revealed);
      }
    } else if (*census) {
      const ssbm::Instance inst = obtain_instance(model);
      emit(ssbm::to_json(ssbm::census_estimate(inst.graph, inst.revealed, t,
                                               model.seed)),
           out);
    } else if (*sdp) {
      const ssbm::Instance inst = obtain_instance(model);
      const auto sol = ssbm::solve_sdp(inst.graph,
                                       centering_degree(model, inst.graph),
                                       solver_config(solver, model.seed));
      const auto est =
          ssbm::estimate_from_sdp(inst.graph, sol, inst.revealed, model.seed);
      emit(with_overlap(ssbm::to_json(sol), est.overlap).dump(), out);
    } else if (*csdp) {
      const ssbm::Instance inst = obtain_instance(model);
      const auto sol = ssbm::solve_csdp(inst.graph, inst.revealed,
                                        centering_degree(model, inst.graph),
                                        solver_config(solver, model.seed));
      const auto est =
          ssbm::estimate_unrevealed(inst.graph, sol, inst.revealed, model.seed);
      emit(with_overlap(ssbm::to_json(sol), est.overlap).dump(), out);
    } else if (*test) {
      const ssbm::Instance inst = obtain_instance(model);
      const auto sol = ssbm::solve_csdp(inst.graph, inst.revealed,
                                        0.5 * (model.a + model.b),
                                        solver_config(solver, model.seed));
      emit(ssbm::to_json(ssbm::detection_test(
               sol.value, inst.graph.num_vertices(), model.a, model.b, delta)),
           out);
    } else if (*sweep) {
      ssbm::ExperimentConfig cfg;
      if (!config_path.empty()) {
        cfg = ssbm::load_experiment_config(config_path);
      } else if (kind.empty()) {
        throw ssbm::InvalidArgument("sweep needs --config or --kind");
      }
      if (!kind.empty()) cfg.kind = ssbm::parse_experiment_kind(kind);
      if (!sweep_n.empty()) cfg.n = sweep_n;
      if (!sweep_a.empty()) cfg.a = sweep_a;
      if (!sweep_b.empty()) cfg.b = sweep_b;
      if (!sweep_rho.empty()) cfg.rho = sweep_rho;
      if (reps) cfg.reps = *reps;
      if (sweep_t) cfg.t = *sweep_t;
      if (sweep_seed) cfg.seed = *sweep_seed;
      if (threads) cfg.threads = *threads;
      if (rank) cfg.solver.rank = *rank;
      if (tol) cfg.solver.tol = *tol;
      if (max_sweeps) cfg.solver.max_sweeps = *max_sweeps;
      if (restarts) cfg.solver.restarts = *restarts;
      if (out_dir) cfg.out_dir = *out_dir;
      if (timing) cfg.timing = true;
      const ssbm::SweepResult result = ssbm::run_sweep(cfg);
      std::cout << "records: " << result.records.size() << '\n'
                << "csv: " << result.csv_path.string() << '\n'
                << "summary: " << result.summary_path.string() << '\n';
      if (result.oracles && !result.oracles->all_passed()) return kExitOracle;
    } else if (*oracles) {
      ssbm::OracleOptions options;
      options.seed = oracle_seed;
      const ssbm::OracleReport report = ssbm::run_oracle_suite(options);
      for (const auto& c : report.checks) {
        std::printf("%-24s %s  %s\n", c.name.c_str(),
                    c.pass ? "PASS" : "FAIL", c.detail.c_str());
      }
      return report.all_passed() ? 0 : kExitOracle;
    }
  } catch (const ssbm::NumericError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return 0;
}
