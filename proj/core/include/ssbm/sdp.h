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

#ifndef SSBM_SDP_H_
#define SSBM_SDP_H_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ssbm/matrix_operator.h"

namespace ssbm {

// Row i is the unit vector sigma_i; X = F F^T.
using Factor =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct SolverConfig {
  // Factor width k. Zero selects default_rank(dim).
  int rank = 0;
  // Stop once a full sweep improves the objective by less than tol * |value|.
  double tol = 1e-6;
  int max_sweeps = 2000;
  int restarts = 3;
  std::uint64_t seed = 0;

  // Throws InvalidArgument on out-of-range settings.
  void validate() const;
};

// min(dim, ceil(sqrt(2 dim)) + 1), and at least 2.
int default_rank(std::size_t dim);

struct SdpSolution {
  Factor factor;
  // <M, F F^T>
  double value = 0.0;
  int sweeps_used = 0;
  bool converged = false;
  // Index of the restart that produced `factor`.
  int best_of = 0;
  // Objective after each sweep of the winning restart; entry 0 is the
  // objective at initialization.
  std::vector<double> history;
};

// <M, F F^T> computed directly from the factor.
double factor_objective(const MatrixOperator& m, const Factor& factor);

// max <M, X> over the elliptope {X >= 0, X_ii = 1} by block-coordinate
// ascent on a rank-k factor: each row is replaced by the normalized
// off-diagonal gradient g_i = sum_{j != i} M_ij sigma_j, in index order.
// Throws InvalidArgument on an empty operator and NumericError on a
// non-finite one.
SdpSolution solve_elliptope(const MatrixOperator& m, const SolverConfig& cfg);

// Upper bound on the elliptope SDP from dual multipliers read off the
// factor's stationarity conditions.
struct DualCertificate {
  std::vector<double> y;
  // sum(y) - n * min(0, lambda_min(diag(y) - M))
  double upper_bound = 0.0;
  // upper_bound - value
  double gap = 0.0;
  double lambda_min = 0.0;
  // False when the eigenvalue iteration did not reach its tolerance; the
  // bound then uses a Gershgorin lower estimate and stays valid.
  bool lambda_converged = true;
};

DualCertificate certify_dual(const MatrixOperator& m, const SdpSolution& sol);

// Sign pattern of the leading eigenvector of X = F F^T, computed by power
// iteration with products against F only. Zero entries map to +1 and the
// first nonzero coordinate is made positive. Throws NumericError for an
// all-zero factor.
std::vector<std::int8_t> round_leading_eigvec(const SdpSolution& sol,
                                              std::uint64_t seed);

}  // namespace ssbm

#endif  // SSBM_SDP_H_
