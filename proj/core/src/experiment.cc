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

#include "ssbm/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <system_error>
#include <thread>

#include "json.hpp"
#include "ssbm/bounds.h"
#include "ssbm/census.h"
#include "ssbm/csdp.h"
#include "ssbm/errors.h"
#include "ssbm/rng.h"
#include "svg.h"

namespace ssbm {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr std::pair<ExperimentKind, const char*> kKindNames[] = {
    {ExperimentKind::kCensusSweep, "census-sweep"},
    {ExperimentKind::kPhaseGrid, "phase-grid"},
    {ExperimentKind::kDetectionBoxes, "detection-boxes"},
    {ExperimentKind::kSandwichAudit, "sandwich-audit"},
    {ExperimentKind::kOracleSuite, "oracle-suite"},
};

std::vector<Algorithm> algorithms_for(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kCensusSweep:
      return {Algorithm::kCensus};
    case ExperimentKind::kPhaseGrid:
      return {Algorithm::kCensus, Algorithm::kSdp, Algorithm::kCsdp};
    case ExperimentKind::kDetectionBoxes:
    case ExperimentKind::kSandwichAudit:
      return {Algorithm::kSdp, Algorithm::kCsdp};
    case ExperimentKind::kOracleSuite:
      return {};
  }
  return {};
}

struct Task {
  std::uint32_t cell = 0;
  std::uint32_t rep = 0;
  TruthModel truth = TruthModel::kSbm;
};

struct TaskOutput {
  std::vector<ResultRecord> records;
  std::optional<SandwichReport> sandwich;
};

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - since)
      .count();
}

TaskOutput run_task(const ExperimentConfig& cfg, const Cell& cell,
                    const Task& task) {
  const std::uint64_t instance_seed = derive_seed(
      cfg.seed, cell.index, task.rep, static_cast<std::uint64_t>(task.truth));
  ResultRecord base;
  base.seed = instance_seed;
  base.rep = task.rep;
  base.n = cell.params.n;
  base.a = cell.params.a;
  base.b = cell.params.b;
  base.rho = cell.params.rho;
  base.snr = snr(cell.params.a, cell.params.b);
  base.truth_model = task.truth;
  base.cell = cell.index;

  TaskOutput out;
  const std::vector<Algorithm> algorithms = algorithms_for(cfg.kind);
  try {
    ModelParams p = cell.params;
    p.seed = instance_seed;
    if (task.truth == TruthModel::kErm) p.a = p.b = cell.params.d();
    const Instance inst = sample_instance(p);
    const bool sbm = task.truth == TruthModel::kSbm;
    SolverConfig solver = cfg.solver;
    solver.seed = derive_seed(
        instance_seed, static_cast<std::uint64_t>(StreamPurpose::kSolverInit));
    const double d = cell.params.d();
    const bool testable = cell.params.a > cell.params.b;

    auto record = [&](Algorithm algorithm,
                      std::chrono::steady_clock::time_point start) {
      ResultRecord r = base;
      r.algorithm = algorithm;
      if (cfg.timing) r.runtime_ms = elapsed_ms(start);
      return r;
    };

    if (cfg.kind == ExperimentKind::kSandwichAudit) {
      const auto start = std::chrono::steady_clock::now();
      const SandwichReport s =
          sandwich_check(inst.graph, inst.revealed, d, solver);
      ResultRecord sdp = record(Algorithm::kSdp, start);
      sdp.sdp_value = s.upper;
      ResultRecord csdp = record(Algorithm::kCsdp, start);
      csdp.csdp_value = s.mid;
      csdp.margin00 = s.margin00;
      if (testable) {
        csdp.test_decision =
            detection_test(s.mid, p.n, cell.params.a, cell.params.b).decision;
      }
      out.records = {sdp, csdp};
      out.sandwich = s;
      return out;
    }

    for (Algorithm algorithm : algorithms) {
      const auto start = std::chrono::steady_clock::now();
      if (algorithm == Algorithm::kCensus) {
        double overlap;
        if (inst.revealed.num_revealed() == p.n) {
          // Nothing left to estimate: score each vertex from the others.
          const LeaveOneOutResult loo = census_leave_one_out(
              inst.graph, inst.revealed, cfg.t, instance_seed);
          overlap = std::fabs(2.0 * loo.accuracy() - 1.0);
        } else {
          overlap = census_estimate(inst.graph, inst.revealed, cfg.t,
                                    instance_seed)
                        .overlap;
        }
        ResultRecord r = record(algorithm, start);
        if (sbm) r.overlap_unrevealed = overlap;
        out.records.push_back(r);
      } else if (algorithm == Algorithm::kSdp) {
        const SdpSolution sol = solve_sdp(inst.graph, d, solver);
        std::optional<double> overlap;
        if (sbm && inst.revealed.num_revealed() < p.n) {
          overlap = estimate_from_sdp(inst.graph, sol, inst.revealed,
                                      instance_seed)
                        .overlap;
        }
        ResultRecord r = record(algorithm, start);
        r.sdp_value = sol.value;
        r.overlap_unrevealed = overlap;
        r.converged = sol.converged;
        out.records.push_back(r);
      } else {
        const CsdpSolution sol =
            solve_csdp(inst.graph, inst.revealed, d, solver);
        std::optional<double> overlap;
        if (sbm && inst.revealed.num_revealed() < p.n) {
          overlap = estimate_unrevealed(inst.graph, sol, inst.revealed,
                                        instance_seed)
                        .overlap;
        }
        ResultRecord r = record(algorithm, start);
        r.csdp_value = sol.value;
        r.margin00 = sol.margin00;
        r.overlap_unrevealed = overlap;
        if (testable) {
          r.test_decision =
              detection_test(sol.value, p.n, cell.params.a, cell.params.b)
                  .decision;
        }
        r.converged = sol.inner.converged;
        out.records.push_back(r);
      }
    }
  } catch (const std::exception& e) {
    out.records.clear();
    out.sandwich.reset();
    for (Algorithm algorithm : algorithms) {
      ResultRecord r = base;
      r.algorithm = algorithm;
      r.converged = false;
      r.error = e.what();
      out.records.push_back(r);
    }
  }
  return out;
}

template <typename T>
std::vector<T> read_list(const json& j, const char* key) {
  if (j.is_array()) return j.get<std::vector<T>>();
  if (j.is_number()) return {j.get<T>()};
  throw InvalidArgument(std::string("config: '") + key +
                        "' must be a number or a list");
}

json stats_json(const std::optional<Stats>& s) {
  if (!s) return nullptr;
  return {{"count", s->count}, {"mean", s->mean},     {"stderr", s->stderr_mean},
          {"min", s->min},     {"q1", s->q1},         {"median", s->median},
          {"q3", s->q3},       {"max", s->max}};
}

std::string timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

json summary_json(const ExperimentConfig& cfg, const std::vector<Cell>& cells,
                  const SweepResult& result) {
  json j;
  j["timestamp"] = timestamp();
  j["kind"] = to_string(cfg.kind);
  j["seed"] = cfg.seed;
  j["reps"] = cfg.reps;
  j["t"] = cfg.t;
  j["solver"] = {{"rank", cfg.solver.rank},
                 {"tol", cfg.solver.tol},
                 {"max_sweeps", cfg.solver.max_sweeps},
                 {"restarts", cfg.solver.restarts}};
  json cells_json = json::array();
  for (const Cell& c : cells) {
    const ModelParams& p = c.params;
    json cj = {{"cell", c.index}, {"n", p.n},       {"a", p.a},
               {"b", p.b},        {"rho", p.rho},   {"d", p.d()},
               {"m", p.m()},      {"snr", snr(p.a, p.b)}};
    if (p.a > p.b) {
      const TestOutcome t = detection_test(0.0, p.n, p.a, p.b);
      cj["threshold"] = t.threshold;
      cj["rho0"] = t.rho0;
    }
    const double accuracy = predict_accuracy_erf(p.a, p.b, p.rho, cfg.t);
    cj["reference"] = {{"overlap_lower_curve", overlap_lower_curve(p.a, p.b, p.rho)},
                       {"erf_accuracy", accuracy},
                       {"erf_overlap", 2.0 * accuracy - 1.0}};
    cells_json.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells_json);

  json groups = json::array();
  for (const GroupSummary& g : result.groups) {
    groups.push_back({{"cell", g.cell},
                      {"algorithm", to_string(g.algorithm)},
                      {"truth_model", to_string(g.truth_model)},
                      {"records", g.records},
                      {"failures", g.failures},
                      {"overlap_unrevealed", stats_json(g.overlap)},
                      {"sdp_value", stats_json(g.sdp_value)},
                      {"csdp_value", stats_json(g.csdp_value)},
                      {"margin00", stats_json(g.margin00)}});
  }
  j["groups"] = std::move(groups);

  json panels = json::array();
  for (const DetectionPanel& p : result.panels) {
    panels.push_back({{"cell", p.cell},
                      {"value", p.algorithm == Algorithm::kSdp ? "sdp_value"
                                                               : "csdp_value"},
                      {"sbm", p.planted},
                      {"erm", p.null},
                      {"separation", p.separation},
                      {"best_threshold_accuracy", p.best_accuracy}});
  }
  j["detection_panels"] = std::move(panels);

  json sandwich = json::array();
  for (const SandwichTally& s : result.sandwich) {
    sandwich.push_back({{"cell", s.cell},
                        {"instances", s.instances},
                        {"submatrix_holds", s.submatrix_holds},
                        {"applicable", s.applicable},
                        {"sandwich_holds", s.sandwich_holds}});
  }
  j["sandwich"] = std::move(sandwich);

  json failures = json::array();
  for (const ResultRecord& r : result.records) {
    if (r.error.empty() && r.converged) continue;
    failures.push_back({{"cell", r.cell},
                        {"rep", r.rep},
                        {"algorithm", to_string(r.algorithm)},
                        {"truth_model", to_string(r.truth_model)},
                        {"converged", r.converged},
                        {"error", r.error}});
  }
  j["failures"] = std::move(failures);

  if (result.oracles) {
    json checks = json::array();
    for (const OracleCheck& c : result.oracles->checks) {
      checks.push_back(
          {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    j["oracles"] = {{"passed", result.oracles->all_passed()},
                    {"checks", std::move(checks)}};
  }
  return j;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw IoError("cannot write " + path.string());
}

const GroupSummary* find_group(const std::vector<GroupSummary>& groups,
                               std::uint32_t cell, Algorithm algorithm,
                               TruthModel truth) {
  for (const GroupSummary& g : groups) {
    if (g.cell == cell && g.algorithm == algorithm && g.truth_model == truth) {
      return &g;
    }
  }
  return nullptr;
}

double mean_overlap(const GroupSummary* g) {
  return g && g->overlap ? g->overlap->mean : NAN;
}

std::vector<std::pair<fs::path, std::string>> figures(
    const ExperimentConfig& cfg, const std::vector<Cell>& cells,
    const SweepResult& result) {
  using internal::Series;
  std::vector<std::pair<fs::path, std::string>> out;
  const auto& groups = result.groups;
  if (cfg.kind == ExperimentKind::kCensusSweep) {
    std::map<std::tuple<std::uint32_t, double, double>, std::vector<Cell>>
        curves;
    for (const Cell& c : cells) {
      curves[{c.params.n, c.params.a, c.params.b}].push_back(c);
    }
    std::vector<Series> series;
    for (const auto& [key, members] : curves) {
      const auto& [n, a, b] = key;
      std::ostringstream label;
      label << "n=" << n << " a=" << a << " b=" << b;
      Series mean{label.str(), {}, {}, false};
      Series lower{"lower curve", {}, {}, true};
      Series erf{"erf prediction", {}, {}, true};
      for (const Cell& c : members) {
        mean.xs.push_back(c.params.rho);
        mean.ys.push_back(mean_overlap(find_group(
            groups, c.index, Algorithm::kCensus, TruthModel::kSbm)));
        lower.xs.push_back(c.params.rho);
        lower.ys.push_back(overlap_lower_curve(a, b, c.params.rho));
        erf.xs.push_back(c.params.rho);
        erf.ys.push_back(
            2.0 * predict_accuracy_erf(a, b, c.params.rho, cfg.t) - 1.0);
      }
      series.push_back(std::move(mean));
      series.push_back(std::move(lower));
      series.push_back(std::move(erf));
    }
    out.emplace_back("overlap_vs_rho.svg",
                     internal::line_plot({"Census overlap", "rho", "overlap"},
                                         series));
  } else if (cfg.kind == ExperimentKind::kPhaseGrid) {
    std::vector<Series> series;
    for (Algorithm algorithm :
         {Algorithm::kCensus, Algorithm::kSdp, Algorithm::kCsdp}) {
      Series s{to_string(algorithm), {}, {}, false};
      std::vector<std::pair<double, double>> points;
      for (const Cell& c : cells) {
        points.emplace_back(
            snr(c.params.a, c.params.b),
            mean_overlap(find_group(groups, c.index, algorithm,
                                    TruthModel::kSbm)));
      }
      std::sort(points.begin(), points.end());
      for (const auto& [x, y] : points) {
        s.xs.push_back(x);
        s.ys.push_back(y);
      }
      series.push_back(std::move(s));
    }
    out.emplace_back("overlap_vs_snr.svg",
                     internal::line_plot({"Mean overlap", "SNR", "overlap"},
                                         series));
    std::set<double> as, bs;
    for (const Cell& c : cells) {
      if (c.params.n == cells.front().params.n &&
          c.params.rho == cells.front().params.rho) {
        as.insert(c.params.a);
        bs.insert(c.params.b);
      }
    }
    if (as.size() > 1 && bs.size() > 1) {
      const std::vector<double> xs(as.begin(), as.end());
      const std::vector<double> ys(bs.begin(), bs.end());
      for (Algorithm algorithm : {Algorithm::kSdp, Algorithm::kCsdp}) {
        std::vector<std::vector<double>> grid(
            ys.size(), std::vector<double>(xs.size(), NAN));
        for (const Cell& c : cells) {
          if (c.params.n != cells.front().params.n ||
              c.params.rho != cells.front().params.rho) {
            continue;
          }
          const auto col = std::lower_bound(xs.begin(), xs.end(), c.params.a) -
                           xs.begin();
          const auto row = std::lower_bound(ys.begin(), ys.end(), c.params.b) -
                           ys.begin();
          grid[row][col] = mean_overlap(
              find_group(groups, c.index, algorithm, TruthModel::kSbm));
        }
        out.emplace_back(
            "phase_" + to_string(algorithm) + ".svg",
            internal::heatmap({"Mean overlap (" + to_string(algorithm) + ")",
                               "a", "b"},
                              xs, ys, grid));
      }
    }
  } else if (cfg.kind == ExperimentKind::kDetectionBoxes) {
    for (const Cell& c : cells) {
      std::vector<internal::Box> boxes;
      for (Algorithm algorithm : {Algorithm::kSdp, Algorithm::kCsdp}) {
        for (TruthModel truth : {TruthModel::kSbm, TruthModel::kErm}) {
          const GroupSummary* g = find_group(groups, c.index, algorithm, truth);
          if (!g) continue;
          const auto& stats =
              algorithm == Algorithm::kSdp ? g->sdp_value : g->csdp_value;
          if (stats) {
            boxes.push_back(
                {to_string(algorithm) + " " + to_string(truth), *stats});
          }
        }
      }
      std::ostringstream title;
      title << "n=" << c.params.n << " a=" << c.params.a
            << " b=" << c.params.b << " rho=" << c.params.rho;
      out.emplace_back("boxes_cell" + std::to_string(c.index) + ".svg",
                       internal::box_plot({title.str(), "", "value"}, boxes));
    }
  }
  return out;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

ExperimentKind parse_experiment_kind(const std::string& name) {
  for (const auto& [k, n] : kKindNames) {
    if (name == n) return k;
  }
  throw InvalidArgument("unknown experiment kind '" + name + "'");
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kCensus: return "census-t";
    case Algorithm::kSdp: return "sdp";
    case Algorithm::kCsdp: return "csdp";
  }
  return "unknown";
}

std::string to_string(TruthModel model) {
  return model == TruthModel::kSbm ? "sbm" : "erm";
}

void ExperimentConfig::validate() const {
  if (reps < 1) throw InvalidArgument("reps must be at least 1");
  if (t < 1) throw InvalidArgument("t must be at least 1");
  if (kind == ExperimentKind::kOracleSuite) return;
  solver.validate();
  expand_cells(*this);
}

std::vector<Cell> expand_cells(const ExperimentConfig& cfg) {
  if (cfg.n.empty() || cfg.rho.empty()) {
    throw InvalidArgument("grids for n and rho must be non-empty");
  }
  std::vector<std::pair<double, double>> pairs;
  if (cfg.pairs) {
    pairs = *cfg.pairs;
  } else {
    for (double a : cfg.a) {
      for (double b : cfg.b) pairs.emplace_back(a, b);
    }
  }
  if (pairs.empty()) throw InvalidArgument("grids for a and b must be non-empty");
  std::vector<Cell> cells;
  for (std::uint32_t n : cfg.n) {
    for (const auto& [a, b] : pairs) {
      if (cfg.kind == ExperimentKind::kPhaseGrid && b > a) continue;
      for (double rho : cfg.rho) {
        Cell c;
        c.index = static_cast<std::uint32_t>(cells.size());
        c.params = ModelParams{n, a, b, rho, 0};
        c.params.validate();
        if (!(a + b > 0.0)) {
          throw InvalidArgument("cells need a + b > 0");
        }
        cells.push_back(c);
      }
    }
  }
  if (cells.empty()) throw InvalidArgument("the grid has no valid cell");
  return cells;
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  ExperimentConfig cfg;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "kind") {
        cfg.kind = parse_experiment_kind(value.get<std::string>());
      } else if (key == "n") {
        cfg.n = read_list<std::uint32_t>(value, "n");
      } else if (key == "a") {
        cfg.a = read_list<double>(value, "a");
      } else if (key == "b") {
        cfg.b = read_list<double>(value, "b");
      } else if (key == "rho") {
        cfg.rho = read_list<double>(value, "rho");
      } else if (key == "pairs") {
        cfg.pairs = value.get<std::vector<std::pair<double, double>>>();
      } else if (key == "reps") {
        cfg.reps = value.get<std::uint32_t>();
      } else if (key == "t") {
        cfg.t = value.get<std::uint32_t>();
      } else if (key == "solver") {
        for (const auto& [skey, svalue] : value.items()) {
          if (skey == "rank") {
            cfg.solver.rank = svalue.get<int>();
          } else if (skey == "tol") {
            cfg.solver.tol = svalue.get<double>();
          } else if (skey == "max_sweeps") {
            cfg.solver.max_sweeps = svalue.get<int>();
          } else if (skey == "restarts") {
            cfg.solver.restarts = svalue.get<int>();
          } else if (skey == "seed") {
            cfg.solver.seed = svalue.get<std::uint64_t>();
          } else {
            throw InvalidArgument("config: unknown solver key '" + skey + "'");
          }
        }
      } else if (key == "out_dir") {
        cfg.out_dir = value.get<std::string>();
      } else if (key == "seed") {
        cfg.seed = value.get<std::uint64_t>();
      } else if (key == "threads") {
        cfg.threads = value.get<unsigned>();
      } else if (key == "timing") {
        cfg.timing = value.get<bool>();
      } else {
        throw InvalidArgument("config: unknown key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("config: ") + e.what());
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_experiment_config(text.str());
}

SweepResult run_tasks(const ExperimentConfig& cfg) {
  cfg.validate();
  SweepResult result;
  if (cfg.kind == ExperimentKind::kOracleSuite) {
    OracleOptions options;
    options.seed = cfg.seed;
    options.solver = cfg.solver;
    result.oracles = run_oracle_suite(options);
    return result;
  }
  const std::vector<Cell> cells = expand_cells(cfg);
  std::vector<Task> tasks;
  for (const Cell& c : cells) {
    for (std::uint32_t rep = 0; rep < cfg.reps; ++rep) {
      tasks.push_back({c.index, rep, TruthModel::kSbm});
      if (cfg.kind == ExperimentKind::kDetectionBoxes) {
        tasks.push_back({c.index, rep, TruthModel::kErm});
      }
    }
  }
  std::vector<TaskOutput> outputs(tasks.size());
  unsigned workers = cfg.threads ? cfg.threads
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, tasks.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      outputs[k] = run_task(cfg, cells[tasks[k].cell], tasks[k]);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::map<std::uint32_t, SandwichTally> tallies;
  for (std::size_t k = 0; k < tasks.size(); ++k) {
    for (ResultRecord& r : outputs[k].records) {
      result.records.push_back(std::move(r));
    }
    if (const auto& s = outputs[k].sandwich) {
      SandwichTally& t = tallies[tasks[k].cell];
      t.cell = tasks[k].cell;
      ++t.instances;
      t.submatrix_holds += s->submatrix_holds;
      t.applicable += s->applicable;
      t.sandwich_holds += s->applicable && s->sandwich_holds;
    }
  }
  for (const auto& [cell, tally] : tallies) result.sandwich.push_back(tally);
  result.groups = summarize(result.records);
  result.panels = detection_panels(result.records);
  return result;
}

SweepResult run_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  const fs::path probe = cfg.out_dir / ".ssbm_write_probe";
  {
    std::ofstream out(probe);
    if (ec || !out) {
      throw IoError("output directory is not writable: " +
                    cfg.out_dir.string());
    }
  }
  fs::remove(probe, ec);

  SweepResult result = run_tasks(cfg);
  std::vector<Cell> cells;
  if (cfg.kind != ExperimentKind::kOracleSuite) cells = expand_cells(cfg);

  result.csv_path = cfg.out_dir / "records.csv";
  {
    std::ostringstream csv;
    write_records_csv(csv, result.records);
    write_file(result.csv_path, csv.str());
  }
  for (auto& [name, svg] : figures(cfg, cells, result)) {
    const fs::path path = cfg.out_dir / name;
    write_file(path, svg);
    result.figures.push_back(path);
  }
  result.summary_path = cfg.out_dir / "summary.json";
  write_file(result.summary_path, summary_json(cfg, cells, result).dump(2));
  return result;
}

}  // namespace ssbm
