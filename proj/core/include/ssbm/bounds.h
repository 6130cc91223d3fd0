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

#ifndef SSBM_BOUNDS_H_
#define SSBM_BOUNDS_H_

#include <cstdint>

namespace ssbm {

// delta(a, b) = (a - b) / (2 e^{a+b}): the constant lower bound on
// P(X > Y) - P(X < Y) for X ~ Bin(n, a/n), Y ~ Bin(n, b/n), large n.
double delta_gap(double a, double b);

// Exact comparison of two independent binomials.
struct BinomialComparison {
  double greater = 0.0;  // P(X > Y)
  double equal = 0.0;    // P(X = Y)
  double less = 0.0;     // P(X < Y)

  double gap() const { return greater - less; }
  // P(sgn*(X - Y) = +1) with a fair coin on X = Y.
  double win_with_coin() const { return greater + 0.5 * equal; }
};

// X ~ Bin(trials_x, p_x), Y ~ Bin(trials_y, p_y), independent. Probability
// mass below 1e-15 in either tail is dropped.
BinomialComparison compare_binomials(std::uint64_t trials_x, double p_x,
                                     std::uint64_t trials_y, double p_y);

// P(X > Y) - P(X < Y) for X ~ Bin(trials, a/trials), Y ~ Bin(trials,
// b/trials). Throws InvalidArgument for probabilities outside [0, 1].
double binomial_gap_oracle(std::uint64_t trials, double a, double b);

// 1/2 + 1/2 erf(sqrt(rho SNR^t / 2)): the Gaussian prediction for census
// accuracy at depth t.
double predict_accuracy_erf(double a, double b, double rho, unsigned t);

struct CensusSuccessBound {
  // Overlap level delta/2 that the depth-1 census exceeds ...
  double threshold = 0.0;
  // ... with at least this probability.
  double prob_bound = 0.0;
  // delta evaluated at the rescaled rates (rho a, rho b).
  double delta = 0.0;
};

CensusSuccessBound census_success_bound(double a, double b, double rho,
                                        std::uint64_t n);

// (2/3) sqrt(rho SNR): asymptotic lower curve for the expected depth-1
// census overlap.
double overlap_lower_curve(double a, double b, double rho);

}  // namespace ssbm

#endif  // SSBM_BOUNDS_H_
