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

#include "ssbm/cut_norm.h"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "ssbm/errors.h"
#include "ssbm/matrix_operator.h"
#include "ssbm/model.h"
#include "ssbm/rng.h"

namespace ssbm {

double cut_norm_exact(const Eigen::MatrixXd& m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  if (static_cast<std::size_t>(rows) > kMaxCutNormDim) {
    throw InvalidArgument("exact cut norm limited to " +
                          std::to_string(kMaxCutNormDim) + " rows");
  }
  if (rows == 0 || cols == 0) return 0.0;
  // Flipping every s_i leaves sum_j |(s^T M)_j| unchanged, so s_0 = +1.
  Eigen::VectorXd column_sums = m.colwise().sum().transpose();
  double best = column_sums.cwiseAbs().sum();
  std::vector<int> sign(static_cast<std::size_t>(rows), 1);
  const std::uint64_t states = std::uint64_t{1} << (rows - 1);
  for (std::uint64_t step = 1; step < states; ++step) {
    // Gray code: flip row 1 + (index of the lowest set bit).
    const auto row = static_cast<Eigen::Index>(std::countr_zero(step)) + 1;
    const int s = sign[static_cast<std::size_t>(row)];
    column_sums -= (2.0 * s) * m.row(row).transpose();
    sign[static_cast<std::size_t>(row)] = -s;
    best = std::max(best, column_sums.cwiseAbs().sum());
  }
  return best;
}

GrothendieckReport grothendieck_check(const Eigen::MatrixXd& m,
                                      const SolverConfig& cfg) {
  if (m.rows() != m.cols()) throw InvalidArgument("matrix must be square");
  GrothendieckReport report;
  report.cut_norm = cut_norm_exact(m);
  report.sdp_value =
      solve_elliptope(MatrixOperator::from_dense(m), cfg).value;
  report.ratio = report.cut_norm > 0.0
                     ? report.sdp_value / report.cut_norm
                     : std::numeric_limits<double>::quiet_NaN();
  report.pass =
      report.sdp_value <= kGrothendieckBound * report.cut_norm + 1e-6;
  return report;
}

CutNormTrialReport cut_norm_concentration_trial(std::uint32_t n, double d,
                                                std::size_t samples,
                                                std::uint64_t seed) {
  if (n == 0 || n > kMaxCutNormDim) {
    throw InvalidArgument("cut norm trial needs 1 <= n <= 20");
  }
  const double p = d / n;
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("d/n must lie in [0, 1]");
  CutNormTrialReport report;
  report.samples = samples;
  report.bound = 6.0 * (1.0 + d) * n;
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd expected = Eigen::MatrixXd::Constant(dim, dim, p);
  expected.diagonal().setZero();
  double total = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Graph g = sample_erdos_renyi(
        n, p, derive_seed(seed, static_cast<std::uint64_t>(StreamPurpose::kOracle), s));
    Eigen::MatrixXd centered = -expected;
    for (const auto& [u, v] : g.edge_list()) {
      centered(u, v) += 1.0;
      centered(v, u) += 1.0;
    }
    const double norm = cut_norm_exact(centered);
    report.max_norm = std::max(report.max_norm, norm);
    total += norm;
    if (norm > report.bound) ++report.violations;
  }
  report.mean_norm = samples > 0 ? total / static_cast<double>(samples) : 0.0;
  return report;
}

}  // namespace ssbm
