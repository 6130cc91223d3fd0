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

#include "ssbm/oracle_suite.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "ssbm/cut_norm.h"
#include "ssbm/errors.h"
#include "ssbm/rng.h"

namespace ssbm {
namespace {

std::string fmt(const char* pattern, double x, double y = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), pattern, x, y);
  return buf;
}

// Brute force over both sign vectors.
double cut_norm_brute(const Eigen::MatrixXd& m) {
  const auto rows = static_cast<int>(m.rows());
  const auto cols = static_cast<int>(m.cols());
  double best = 0.0;
  for (long s = 0; s < (1L << rows); ++s) {
    for (long t = 0; t < (1L << cols); ++t) {
      double sum = 0.0;
      for (int i = 0; i < rows; ++i) {
        const double si = (s >> i) & 1 ? -1.0 : 1.0;
        for (int j = 0; j < cols; ++j) {
          sum += si * ((t >> j) & 1 ? -1.0 : 1.0) * m(i, j);
        }
      }
      best = std::max(best, sum);
    }
  }
  return best;
}

long double erf_series(long double x) {
  // erf(x) = 2/sqrt(pi) sum_k (-1)^k x^(2k+1) / (k! (2k+1))
  long double term = x;
  long double sum = x;
  for (int k = 1; k < 400; ++k) {
    term *= -x * x / k;
    const long double add = term / (2 * k + 1);
    sum += add;
    if (std::fabs(add) < 1e-30L) break;
  }
  return sum * 2.0L / std::sqrt(3.14159265358979323846264338327950288L);
}

RevealedLabels random_reveal(std::uint32_t n, std::uint32_t m,
                             std::uint64_t seed) {
  ModelParams p{n, 0.0, 0.0, static_cast<double>(m) / n, seed};
  return sample_instance(p).revealed;
}

OracleCheck check_binomial_gap(const OracleOptions& opt) {
  OracleCheck c{"binomial-gap", true, ""};
  double worst = INFINITY;
  for (double a : {3.0, 5.0, 9.0}) {
    for (double b : {1.0, 2.0}) {
      const double delta = opt.delta(a, b);
      if (!(delta > 0.0)) {
        c.pass = false;
        c.detail = fmt("delta(%g, ...) is not positive", a);
        return c;
      }
      for (std::uint64_t trials : {100u, 1000u, 10000u}) {
        const double gap = binomial_gap_oracle(trials, a, b);
        worst = std::min(worst, gap - delta);
        if (gap < delta) c.pass = false;
      }
    }
  }
  c.detail = fmt("min(gap - delta) = %.6g", worst);
  return c;
}

OracleCheck check_cut_norm(const OracleOptions& opt) {
  OracleCheck c{"cut-norm-exact", true, ""};
  double worst = 0.0;
  for (int trial = 0; trial < 6; ++trial) {
    SplitMix64 rng = make_stream(opt.seed, StreamPurpose::kOracle, trial);
    const int dim = 3 + trial % 4;
    Eigen::MatrixXd m(dim, dim);
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) m(i, j) = rng.normal();
    }
    const double exact = cut_norm_exact(m);
    const double brute = cut_norm_brute(m);
    worst = std::max(worst, std::fabs(exact - brute));
  }
  c.pass = worst <= 1e-9;
  c.detail = fmt("max |exact - brute force| = %.3g", worst);
  return c;
}

OracleCheck check_grothendieck(const OracleOptions& opt) {
  OracleCheck c{"grothendieck", true, ""};
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    SplitMix64 rng = make_stream(opt.seed, StreamPurpose::kOracle, 100 + trial);
    Eigen::MatrixXd m(8, 8);
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) m(i, j) = rng.coin() ? 1.0 : -1.0;
    }
    SolverConfig cfg = opt.solver;
    cfg.seed = derive_seed(opt.seed, 100 + trial);
    const GrothendieckReport r = grothendieck_check(m, cfg);
    if (!r.pass) c.pass = false;
    if (std::isfinite(r.ratio)) worst = std::max(worst, r.ratio);
  }
  c.detail = fmt("max SDP / cut norm = %.4f", worst);
  return c;
}

OracleCheck check_concentration(const OracleOptions& opt) {
  const CutNormTrialReport r =
      cut_norm_concentration_trial(10, 3.0, 20, derive_seed(opt.seed, 200));
  return {"cut-norm-concentration", r.violations == 0,
          fmt("max norm %.3g against bound %.3g", r.max_norm, r.bound)};
}

OracleCheck check_sandwich(const OracleOptions& opt) {
  OracleCheck c{"sandwich", true, ""};
  int applicable = 0;
  for (int trial = 0; trial < 3; ++trial) {
    ModelParams p{120, 9.0, 2.0, 0.3, derive_seed(opt.seed, 300 + trial)};
    const Instance inst = sample_instance(p);
    SolverConfig cfg = opt.solver;
    cfg.seed = derive_seed(p.seed, 1);
    const SandwichReport r =
        sandwich_check(inst.graph, inst.revealed, p.d(), cfg);
    if (!r.submatrix_holds || !r.holds) c.pass = false;
    applicable += r.applicable;
  }
  c.detail = fmt("3 instances, %g with margin00 >= 0", applicable);
  return c;
}

OracleCheck check_embedding(const OracleOptions& opt) {
  OracleCheck c{"embedding-identity", true, ""};
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint64_t seed = derive_seed(opt.seed, 400 + trial);
    MatrixOperator m;
    if (trial % 2 == 0) {
      ModelParams p{20, 9.0, 2.0, 0.3, seed};
      const Instance inst = sample_instance(p);
      m = centered_adjacency(inst.graph, p.d());
    } else {
      SplitMix64 rng = make_stream(seed, StreamPurpose::kOracle, 0);
      Eigen::MatrixXd dense(20, 20);
      for (int i = 0; i < 20; ++i) {
        for (int j = 0; j < 20; ++j) dense(i, j) = rng.normal();
      }
      m = MatrixOperator::from_dense(dense);
    }
    const RevealedLabels revealed = random_reveal(20, 6, seed);
    const AggregatedOperator agg = opt.aggregate(m, revealed);
    worst = std::max(worst, std::fabs(agg.op.entry(0, 0) - agg.margin00) /
                                std::max(1.0, std::fabs(agg.margin00)));
    for (int point = 0; point < 5; ++point) {
      const FeasiblePoint fp =
          random_feasible_point(revealed, 4, derive_seed(seed, point));
      worst = std::max(worst, embedding_gap(m, agg, fp));
    }
  }
  c.pass = worst <= 1e-9;
  c.detail = fmt("max relative objective gap = %.3g", worst);
  return c;
}

OracleCheck check_erf(const OracleOptions&) {
  double worst = 0.0;
  for (int k = 0; k <= 1000; ++k) {
    const double x = -4.0 + 8.0 * k / 1000.0;
    worst = std::max(
        worst, static_cast<double>(std::fabs(
                   std::erf(x) - erf_series(static_cast<long double>(x)))));
  }
  return {"erf-series", worst <= 1e-10, fmt("max error %.3g", worst)};
}

OracleCheck check_dual(const OracleOptions& opt) {
  const int n = 30;
  std::vector<Triplet> entries;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i; j < n; ++j) {
      const double xi = i % 2 ? -1.0 : 1.0;
      const double xj = j % 2 ? -1.0 : 1.0;
      entries.push_back({i, j, xi * xj});
    }
  }
  const MatrixOperator m(n, entries);
  SolverConfig cfg = opt.solver;
  cfg.seed = derive_seed(opt.seed, 500);
  const SdpSolution sol = solve_elliptope(m, cfg);
  const DualCertificate cert = certify_dual(m, sol);
  const double target = static_cast<double>(n) * n;
  const bool pass = std::fabs(sol.value - target) <= 1e-3 * target &&
                    cert.gap <= 1e-3 * target && cert.upper_bound >= target - 1e-6;
  return {"dual-certificate", pass,
          fmt("value %.6g, certified gap %.3g", sol.value, cert.gap)};
}

}  // namespace

FeasiblePoint random_feasible_point(const RevealedLabels& revealed,
                                    std::size_t rank, std::uint64_t seed) {
  if (rank == 0) throw InvalidArgument("rank must be positive");
  SplitMix64 rng = make_stream(seed, StreamPurpose::kOracle, 1);
  auto unit_row = [&](auto row) {
    double norm = 0.0;
    while (norm < 1e-8) {
      for (Eigen::Index k = 0; k < row.size(); ++k) row(k) = rng.normal();
      norm = row.norm();
    }
    row /= norm;
  };
  const auto n = static_cast<Eigen::Index>(revealed.size());
  const auto k = static_cast<Eigen::Index>(rank);
  const std::vector<Vertex> rest = revealed.unrevealed();
  FeasiblePoint p;
  p.full.resize(n, k);
  p.aggregated.resize(static_cast<Eigen::Index>(rest.size()) + 1, k);
  unit_row(p.aggregated.row(0));
  for (std::size_t j = 0; j < rest.size(); ++j) {
    unit_row(p.aggregated.row(static_cast<Eigen::Index>(j + 1)));
    p.full.row(rest[j]) = p.aggregated.row(static_cast<Eigen::Index>(j + 1));
  }
  for (Vertex i : revealed.revealed()) {
    p.full.row(i) = revealed[i] * p.aggregated.row(0);
  }
  return p;
}

double embedding_gap(const MatrixOperator& m, const AggregatedOperator& agg,
                     const FeasiblePoint& point) {
  const double full = factor_objective(m, point.full);
  const double folded = factor_objective(agg.op, point.aggregated);
  return std::fabs(full - folded) / std::max(1.0, std::fabs(full));
}

bool OracleReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const OracleCheck& c) { return c.pass; });
}

OracleReport run_oracle_suite(const OracleOptions& options) {
  using CheckFn = OracleCheck (*)(const OracleOptions&);
  constexpr CheckFn kChecks[] = {
      check_binomial_gap, check_cut_norm,  check_grothendieck,
      check_concentration, check_sandwich, check_embedding,
      check_erf,          check_dual,
  };
  OracleReport report;
  for (CheckFn fn : kChecks) {
    try {
      report.checks.push_back(fn(options));
    } catch (const std::exception& e) {
      report.checks.push_back({"error", false, e.what()});
    }
  }
  return report;
}

}  // namespace ssbm
