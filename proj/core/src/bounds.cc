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

#include "ssbm/bounds.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ssbm/errors.h"
#include "ssbm/model.h"

namespace ssbm {
namespace {

constexpr double kTailMass = 1e-15;

// Binomial PMF on its effective support [lo, hi], computed by the ratio
// recurrence outward from the mode and normalized. Returns lo.
std::uint64_t binomial_pmf(std::uint64_t n, double p, std::vector<double>& pmf) {
  pmf.clear();
  if (p <= 0.0 || n == 0) {
    pmf.push_back(1.0);
    return 0;
  }
  if (p >= 1.0) {
    pmf.push_back(1.0);
    return n;
  }
  const auto mode = static_cast<std::uint64_t>(
      std::min<double>(static_cast<double>(n),
                       std::floor((static_cast<double>(n) + 1.0) * p)));
  const double odds = p / (1.0 - p);
  // Relative weights; the mode gets weight 1.
  std::vector<double> upper{1.0};
  for (std::uint64_t k = mode; k < n; ++k) {
    const double next = upper.back() * odds *
                        static_cast<double>(n - k) / static_cast<double>(k + 1);
    if (next < 1e-300) break;
    upper.push_back(next);
  }
  std::vector<double> lower;
  double w = 1.0;
  for (std::uint64_t k = mode; k > 0; --k) {
    w *= static_cast<double>(k) / (odds * static_cast<double>(n - k + 1));
    if (w < 1e-300) break;
    lower.push_back(w);
  }
  const std::uint64_t lo = mode - lower.size();
  pmf.assign(lower.rbegin(), lower.rend());
  pmf.insert(pmf.end(), upper.begin(), upper.end());
  double total = 0.0;
  for (double v : pmf) total += v;
  for (double& v : pmf) v /= total;
  // Trim negligible tails.
  std::size_t first = 0;
  double cut = 0.0;
  while (first + 1 < pmf.size() && cut + pmf[first] < kTailMass) {
    cut += pmf[first++];
  }
  std::size_t last = pmf.size();
  cut = 0.0;
  while (last > first + 1 && cut + pmf[last - 1] < kTailMass) {
    cut += pmf[--last];
  }
  pmf = std::vector<double>(pmf.begin() + static_cast<std::ptrdiff_t>(first),
                            pmf.begin() + static_cast<std::ptrdiff_t>(last));
  return lo + first;
}

void check_unit_interval(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("binomial probability outside [0, 1]");
  }
}

}  // namespace

double delta_gap(double a, double b) {
  return (a - b) / (2.0 * std::exp(a + b));
}

BinomialComparison compare_binomials(std::uint64_t trials_x, double p_x,
                                     std::uint64_t trials_y, double p_y) {
  check_unit_interval(p_x);
  check_unit_interval(p_y);
  std::vector<double> px, py;
  const std::uint64_t lo_x = binomial_pmf(trials_x, p_x, px);
  const std::uint64_t lo_y = binomial_pmf(trials_y, p_y, py);
  // cdf_y[k] = P(Y <= lo_y + k).
  std::vector<double> cdf_y(py.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < py.size(); ++k) cdf_y[k] = (acc += py[k]);
  auto y_at_most = [&](long long value) {
    const long long idx = value - static_cast<long long>(lo_y);
    if (idx < 0) return 0.0;
    if (idx >= static_cast<long long>(cdf_y.size())) return 1.0;
    return cdf_y[static_cast<std::size_t>(idx)];
  };
  BinomialComparison out;
  for (std::size_t k = 0; k < px.size(); ++k) {
    const long long x = static_cast<long long>(lo_x + k);
    const double below = y_at_most(x - 1);
    const double at_most = y_at_most(x);
    out.greater += px[k] * below;
    out.equal += px[k] * (at_most - below);
  }
  out.less = std::max(0.0, 1.0 - out.greater - out.equal);
  return out;
}

double binomial_gap_oracle(std::uint64_t trials, double a, double b) {
  if (trials == 0) throw InvalidArgument("binomial gap needs trials >= 1");
  const double t = static_cast<double>(trials);
  return compare_binomials(trials, a / t, trials, b / t).gap();
}

double predict_accuracy_erf(double a, double b, double rho, unsigned t) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw InvalidArgument("rho must lie in [0, 1]");
  }
  if (t == 0) throw InvalidArgument("census depth must be at least 1");
  const double signal = rho * std::pow(snr(a, b), static_cast<double>(t));
  return 0.5 + 0.5 * std::erf(std::sqrt(signal / 2.0));
}

CensusSuccessBound census_success_bound(double a, double b, double rho,
                                        std::uint64_t n) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw InvalidArgument("rho must lie in [0, 1]");
  }
  CensusSuccessBound out;
  out.delta = delta_gap(rho * a, rho * b);
  out.threshold = out.delta / 2.0;
  const double exponent =
      out.delta * out.delta * (1.0 - rho) * static_cast<double>(n) / 8.0;
  out.prob_bound = -std::expm1(-exponent);
  return out;
}

double overlap_lower_curve(double a, double b, double rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw InvalidArgument("rho must lie in [0, 1]");
  }
  return (2.0 / 3.0) * std::sqrt(rho * snr(a, b));
}

}  // namespace ssbm
