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

#ifndef SSBM_CUT_NORM_H_
#define SSBM_CUT_NORM_H_

#include <cstdint>

#include <Eigen/Dense>

#include "ssbm/sdp.h"

namespace ssbm {

inline constexpr std::size_t kMaxCutNormDim = 20;

// Upper bound on Grothendieck's constant, pi / (2 log(1 + sqrt 2)) rounded
// up.
inline constexpr double kGrothendieckBound = 1.783;

// ||M||_{inf->1} = max_{s,t in {-1,1}^n} s^T M t, by enumerating the row
// signs s (Gray code order, s_0 fixed) and choosing t in closed form.
// Throws InvalidArgument when M has more than kMaxCutNormDim rows.
double cut_norm_exact(const Eigen::MatrixXd& m);

struct GrothendieckReport {
  double sdp_value = 0.0;
  double cut_norm = 0.0;
  // sdp_value / cut_norm; NaN when the cut norm is zero.
  double ratio = 0.0;
  bool pass = false;
};

// Solves SDP((M + M^T)/2) and checks it against kGrothendieckBound times the
// exact cut norm (plus 1e-6).
GrothendieckReport grothendieck_check(const Eigen::MatrixXd& m,
                                      const SolverConfig& cfg);

struct CutNormTrialReport {
  std::size_t samples = 0;
  // 6 (1 + d) n
  double bound = 0.0;
  double max_norm = 0.0;
  double mean_norm = 0.0;
  std::size_t violations = 0;
};

// Samples G(n, d/n) `samples` times and measures ||A - E A||_{inf->1}
// exactly, where E A = (d/n)(1 1^T - I).
CutNormTrialReport cut_norm_concentration_trial(std::uint32_t n, double d,
                                                std::size_t samples,
                                                std::uint64_t seed);

}  // namespace ssbm

#endif  // SSBM_CUT_NORM_H_
