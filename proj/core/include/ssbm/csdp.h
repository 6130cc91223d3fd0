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

#ifndef SSBM_CSDP_H_
#define SSBM_CSDP_H_

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ssbm/census.h"
#include "ssbm/matrix_operator.h"
#include "ssbm/model.h"
#include "ssbm/sdp.h"

namespace ssbm {

// The constrained SDP pins X_ij = x_i x_j on revealed pairs. Every revealed
// row then equals x_i sigma_0, so the revealed block collapses into a single
// margin row/column (index 0) and the constrained problem is the plain
// elliptope SDP of the (n - m + 1)-dimensional aggregated matrix:
//
//   agg_00 = sum_{i,j in R} M_ij x_i x_j
//   agg_0j = sum_{i in R} x_i M_{i, pi(j)}
//   agg_ij = M_{pi(i), pi(j)}
//
// where pi maps 1..n-m onto the unrevealed vertices in ascending order.
struct AggregatedOperator {
  MatrixOperator op;
  double margin00 = 0.0;
  // index_map[j - 1] = pi(j).
  std::vector<Vertex> index_map;
};

// Throws InvalidArgument for an unbalanced reveal or a size mismatch.
AggregatedOperator aggregate(const MatrixOperator& m,
                             const RevealedLabels& revealed);

struct CsdpSolution {
  double value = 0.0;
  // Solution of the aggregated SDP; with nothing revealed this is the
  // solution of the unconstrained SDP on the original matrix.
  SdpSolution inner;
  // Common direction of the revealed rows (row 0 of the aggregated factor).
  // Empty when nothing is revealed.
  Eigen::VectorXd sigma0;
  double margin00 = 0.0;
  std::vector<Vertex> index_map;
};

// Unsupervised SDP on the centered adjacency matrix.
SdpSolution solve_sdp(const Graph& g, double d, const SolverConfig& cfg);

// CSDP(A - (d/n) 1 1^T), solved through the aggregated matrix.
CsdpSolution solve_csdp(const Graph& g, const RevealedLabels& revealed,
                        double d, const SolverConfig& cfg);

// xhat_j = sign(<sigma0, sigma_j>) on unrevealed j (fair coin on zero).
// Without revealed labels this falls back to leading-eigenvector rounding,
// whose global sign is arbitrary. The overlap uses the graph's labels.
EstimateReport estimate_unrevealed(const Graph& g, const CsdpSolution& sol,
                                   const RevealedLabels& revealed,
                                   std::uint64_t seed);

// Unsupervised estimate by leading-eigenvector rounding of an SDP solution.
EstimateReport estimate_from_sdp(const Graph& g, const SdpSolution& sol,
                                 const RevealedLabels& revealed,
                                 std::uint64_t seed);

struct TestOutcome {
  double statistic = 0.0;
  // n ((a - b)/2 - delta)
  double threshold = 0.0;
  int decision = 0;
  double delta_used = 0.0;
  // 1 - (a - b) / (30 (1 + d)): reveal ratio above which the test provably
  // succeeds.
  double rho0 = 0.0;
};

// Decides "planted partition" (1) when statistic >= threshold. Delta
// defaults to (a - b)/40. Throws InvalidArgument unless a > b.
TestOutcome detection_test(double statistic, std::uint32_t n, double a,
                           double b, std::optional<double> delta = {});

struct SandwichReport {
  // SDP of the centered matrix restricted to unrevealed vertices.
  double lower = 0.0;
  // CSDP of the centered matrix.
  double mid = 0.0;
  // SDP of the centered matrix.
  double upper = 0.0;
  double margin00 = 0.0;
  // Slack 1e-3 n sqrt(max(d, 1)) for solver inexactness.
  double tau = 0.0;
  // lower <= mid - margin00 + tau; holds for every instance.
  bool submatrix_holds = false;
  // lower - tau <= mid <= upper + tau; only guaranteed when margin00 >= 0.
  bool sandwich_holds = false;
  bool applicable = false;
  // sandwich_holds, or vacuously true when margin00 < 0.
  bool holds = false;
};

SandwichReport sandwich_check(const Graph& g, const RevealedLabels& revealed,
                              double d, const SolverConfig& cfg);

// Solver slack used by the inequality checks.
double solver_slack(std::uint32_t n, double d);

}  // namespace ssbm

#endif  // SSBM_CSDP_H_
