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

#ifndef SSBM_EXPERIMENT_H_
#define SSBM_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ssbm/model.h"
#include "ssbm/oracle_suite.h"
#include "ssbm/sdp.h"

namespace ssbm {

enum class ExperimentKind {
  kCensusSweep,
  kPhaseGrid,
  kDetectionBoxes,
  kSandwichAudit,
  kOracleSuite,
};

std::string to_string(ExperimentKind kind);
// Throws InvalidArgument on an unknown name.
ExperimentKind parse_experiment_kind(const std::string& name);

enum class Algorithm { kCensus, kSdp, kCsdp };
enum class TruthModel { kSbm, kErm };

std::string to_string(Algorithm algorithm);
std::string to_string(TruthModel model);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kCensusSweep;
  // Cells are the product n x (a, b) x rho. When `pairs` is set it replaces
  // the product a x b.
  std::vector<std::uint32_t> n{1000};
  std::vector<double> a{5.0};
  std::vector<double> b{2.0};
  std::vector<double> rho{0.1};
  std::optional<std::vector<std::pair<double, double>>> pairs;
  std::uint32_t reps = 1;
  // Census depth.
  std::uint32_t t = 1;
  SolverConfig solver;
  std::filesystem::path out_dir = ".";
  std::uint64_t seed = 1;
  // Worker threads; 0 means one per hardware thread.
  unsigned threads = 0;
  // Fill runtime_ms. Off by default so that records.csv is reproducible
  // byte for byte.
  bool timing = false;

  // Throws InvalidArgument. The phase grid drops cells with b > a instead
  // of rejecting them.
  void validate() const;
};

// Reads a JSON object whose keys mirror ExperimentConfig (kind, n, a, b,
// rho, pairs, reps, t, solver{rank, tol, max_sweeps, restarts, seed},
// out_dir, seed, threads, timing). Missing keys keep their defaults.
ExperimentConfig parse_experiment_config(const std::string& json_text);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct Cell {
  std::uint32_t index = 0;
  ModelParams params;
};

// The validated cell list in declaration order.
std::vector<Cell> expand_cells(const ExperimentConfig& cfg);

// One row of records.csv. Optional fields are left empty when they do not
// apply to the algorithm or when the task failed.
struct ResultRecord {
  std::uint64_t seed = 0;
  std::uint32_t rep = 0;
  std::uint32_t n = 0;
  double a = 0.0;
  double b = 0.0;
  double rho = 0.0;
  double snr = 0.0;
  Algorithm algorithm = Algorithm::kCensus;
  std::optional<double> overlap_unrevealed;
  std::optional<double> sdp_value;
  std::optional<double> csdp_value;
  std::optional<double> margin00;
  std::optional<int> test_decision;
  TruthModel truth_model = TruthModel::kSbm;
  std::optional<double> runtime_ms;

  std::uint32_t cell = 0;
  bool converged = true;
  std::string error;
};

// Column names in output order.
std::span<const char* const> result_record_columns();
void write_records_csv(std::ostream& out, std::span<const ResultRecord> rows);
// Parses what write_records_csv wrote. Cell indices are not stored and are
// reconstructed from (n, a, b, rho) in order of first appearance.
std::vector<ResultRecord> read_records_csv(std::istream& in);

struct Stats {
  std::size_t count = 0;
  double mean = 0.0;
  // Unbiased standard error of the mean; 0 for a single value.
  double stderr_mean = 0.0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

// Quartiles by linear interpolation between order statistics. Throws
// InvalidArgument when empty.
Stats describe(std::span<const double> values);

// Best accuracy (correct / total) of the rule "value >= threshold means
// planted" over all thresholds.
double best_threshold_accuracy(std::span<const double> planted,
                               std::span<const double> null);
// min(planted) - max(null); positive when the two sets are separated.
double separation_score(std::span<const double> planted,
                        std::span<const double> null);

struct GroupSummary {
  std::uint32_t cell = 0;
  std::uint32_t n = 0;
  double a = 0.0;
  double b = 0.0;
  double rho = 0.0;
  Algorithm algorithm = Algorithm::kCensus;
  TruthModel truth_model = TruthModel::kSbm;
  std::size_t records = 0;
  std::size_t failures = 0;
  std::optional<Stats> overlap;
  std::optional<Stats> sdp_value;
  std::optional<Stats> csdp_value;
  std::optional<Stats> margin00;
};

// Per (cell, algorithm, truth model) statistics in order of first
// appearance. Throws InvalidArgument on an empty record set.
std::vector<GroupSummary> summarize(std::span<const ResultRecord> records);

struct DetectionPanel {
  std::uint32_t cell = 0;
  Algorithm algorithm = Algorithm::kSdp;
  std::size_t planted = 0;
  std::size_t null = 0;
  double separation = 0.0;
  double best_accuracy = 0.0;
};

// SBM against ERM separation of the objective value for each cell that has
// both truth models (sdp_value for sdp rows, csdp_value for csdp rows).
std::vector<DetectionPanel> detection_panels(
    std::span<const ResultRecord> records);

struct SandwichTally {
  std::uint32_t cell = 0;
  std::size_t instances = 0;
  std::size_t submatrix_holds = 0;
  std::size_t applicable = 0;
  std::size_t sandwich_holds = 0;
};

struct SweepResult {
  std::vector<ResultRecord> records;
  std::vector<GroupSummary> groups;
  std::vector<DetectionPanel> panels;
  std::vector<SandwichTally> sandwich;
  // Only for the oracle-suite kind.
  std::optional<OracleReport> oracles;
  std::filesystem::path csv_path;
  std::filesystem::path summary_path;
  std::vector<std::filesystem::path> figures;
};

// Runs every (cell, rep) task and writes records.csv, summary.json and SVG
// figures into cfg.out_dir. Throws IoError before any work when out_dir
// cannot be written. Task failures are recorded per row.
SweepResult run_sweep(const ExperimentConfig& cfg);

// Runs the tasks without touching the file system.
SweepResult run_tasks(const ExperimentConfig& cfg);

}  // namespace ssbm

#endif  // SSBM_EXPERIMENT_H_
