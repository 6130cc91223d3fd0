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

#include "ssbm/sdp.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "spectral.h"
#include "ssbm/errors.h"
#include "ssbm/rng.h"

namespace ssbm {
namespace {

constexpr int kRecomputeEvery = 64;
constexpr std::size_t kDenseEigenLimit = 400;

void random_unit_rows(Factor& f, SplitMix64& rng) {
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    double norm = 0.0;
    do {
      for (Eigen::Index c = 0; c < f.cols(); ++c) f(i, c) = rng.normal();
      norm = f.row(i).norm();
    } while (norm == 0.0);
    f.row(i) /= norm;
  }
}

// z = sum_j u_j sigma_j.
Eigen::VectorXd weighted_row_sum(const std::vector<double>& u,
                                 const Factor& f) {
  Eigen::VectorXd z = Eigen::VectorXd::Zero(f.cols());
  for (Eigen::Index j = 0; j < f.rows(); ++j) {
    if (u[j] != 0.0) z += u[j] * f.row(j).transpose();
  }
  return z;
}

struct RunResult {
  Factor factor;
  double value;
  int sweeps;
  bool converged;
  std::vector<double> history;
};

RunResult run_mixing(const MatrixOperator& m, int k, const SolverConfig& cfg,
                     int restart) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Factor f(n, k);
  SplitMix64 rng = make_stream(cfg.seed, StreamPurpose::kSolverInit,
                               static_cast<std::uint64_t>(restart));
  random_unit_rows(f, rng);

  const RankOne* r1 = m.rank1() ? &*m.rank1() : nullptr;
  const double c = r1 ? r1->coefficient : 0.0;
  Eigen::VectorXd z = r1 ? weighted_row_sum(r1->u, f) : Eigen::VectorXd();

  RunResult out{Factor(), factor_objective(m, f), 0, false, {}};
  out.history.push_back(out.value);
  std::vector<double> g(static_cast<std::size_t>(k));
  double* fd = f.data();

  for (int sweep = 1; sweep <= cfg.max_sweeps; ++sweep) {
    const double before = out.value;
    for (Eigen::Index i = 0; i < n; ++i) {
      std::fill(g.begin(), g.end(), 0.0);
      const auto cols = m.row_indices(static_cast<std::size_t>(i));
      const auto vals = m.row_values(static_cast<std::size_t>(i));
      for (std::size_t e = 0; e < cols.size(); ++e) {
        const Eigen::Index j = cols[e];
        if (j == i) continue;
        const double w = vals[e];
        const double* sj = fd + j * k;
        for (int t = 0; t < k; ++t) g[t] += w * sj[t];
      }
      double* si = fd + i * k;
      const double ui = r1 ? r1->u[static_cast<std::size_t>(i)] : 0.0;
      if (ui != 0.0) {
        const double cu = c * ui;
        for (int t = 0; t < k; ++t) g[t] += cu * (z[t] - ui * si[t]);
      }
      double norm_sq = 0.0;
      double dot = 0.0;
      for (int t = 0; t < k; ++t) {
        norm_sq += g[t] * g[t];
        dot += g[t] * si[t];
      }
      // A zero gradient leaves the objective flat in sigma_i; keep it.
      if (!(norm_sq > 0.0)) continue;
      const double norm = std::sqrt(norm_sq);
      out.value += 2.0 * (norm - dot);
      const double inv = 1.0 / norm;
      for (int t = 0; t < k; ++t) {
        const double next = g[t] * inv;
        if (ui != 0.0) z[t] += ui * (next - si[t]);
        si[t] = next;
      }
    }
    if (sweep % kRecomputeEvery == 0) {
      out.value = factor_objective(m, f);
      if (r1) z = weighted_row_sum(r1->u, f);
    }
    out.history.push_back(out.value);
    out.sweeps = sweep;
    const double gain = out.value - before;
    if (gain <= cfg.tol * std::abs(out.value)) {
      out.converged = true;
      break;
    }
  }
  out.value = factor_objective(m, f);
  out.history.back() = out.value;
  out.factor = std::move(f);
  return out;
}

}  // namespace

void SolverConfig::validate() const {
  if (rank != 0 && rank < 2) throw InvalidArgument("solver rank must be >= 2");
  if (!(tol > 0.0)) throw InvalidArgument("solver tol must be > 0");
  if (max_sweeps < 1) throw InvalidArgument("max_sweeps must be >= 1");
  if (restarts < 1) throw InvalidArgument("restarts must be >= 1");
}

int default_rank(std::size_t dim) {
  const auto k = static_cast<std::size_t>(
                     std::ceil(std::sqrt(2.0 * static_cast<double>(dim)))) +
                 1;
  return static_cast<int>(std::max<std::size_t>(2, std::min(dim, k)));
}

double factor_objective(const MatrixOperator& m, const Factor& f) {
  if (static_cast<std::size_t>(f.rows()) != m.dim()) {
    throw InvalidArgument("factor rows do not match operator dimension");
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < f.rows(); ++i) {
    const auto cols = m.row_indices(static_cast<std::size_t>(i));
    const auto vals = m.row_values(static_cast<std::size_t>(i));
    double row = 0.0;
    for (std::size_t e = 0; e < cols.size(); ++e) {
      row += vals[e] * f.row(i).dot(f.row(cols[e]));
    }
    total += row;
  }
  if (m.rank1()) {
    const Eigen::VectorXd z = weighted_row_sum(m.rank1()->u, f);
    total += m.rank1()->coefficient * z.squaredNorm();
  }
  total += m.diag_shift() * f.squaredNorm();
  return total;
}

SdpSolution solve_elliptope(const MatrixOperator& m, const SolverConfig& cfg) {
  cfg.validate();
  if (m.dim() == 0) throw InvalidArgument("elliptope SDP on an empty matrix");
  if (!m.all_finite()) throw NumericError("operator has non-finite entries");
  const int k = cfg.rank > 0 ? cfg.rank : default_rank(m.dim());

  SdpSolution best;
  bool have = false;
  for (int r = 0; r < cfg.restarts; ++r) {
    RunResult run = run_mixing(m, k, cfg, r);
    if (!std::isfinite(run.value)) {
      throw NumericError("solver produced a non-finite objective");
    }
    if (!have || run.value > best.value) {
      best.factor = std::move(run.factor);
      best.value = run.value;
      best.sweeps_used = run.sweeps;
      best.converged = run.converged;
      best.best_of = r;
      best.history = std::move(run.history);
      have = true;
    }
  }
  return best;
}

DualCertificate certify_dual(const MatrixOperator& m, const SdpSolution& sol) {
  const std::size_t n = m.dim();
  if (static_cast<std::size_t>(sol.factor.rows()) != n) {
    throw InvalidArgument("solution does not match operator dimension");
  }
  DualCertificate cert;
  cert.y.resize(n);
  // H = M F, one column at a time.
  Eigen::MatrixXd h(static_cast<Eigen::Index>(n), sol.factor.cols());
  for (Eigen::Index c = 0; c < sol.factor.cols(); ++c) {
    h.col(c) = m.multiply(Eigen::VectorXd(sol.factor.col(c)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    const double mii = m.diagonal(i);
    const Eigen::VectorXd g =
        h.row(ii).transpose() - mii * sol.factor.row(ii).transpose();
    cert.y[i] = g.norm() + mii;
  }

  // B = diag(y) - M.
  auto apply = [&](const Eigen::VectorXd& x, Eigen::VectorXd& out) {
    out = m.multiply(x);
    for (std::size_t i = 0; i < n; ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      out(ii) = cert.y[i] * x(ii) - out(ii);
    }
  };

  double lambda = 0.0;
  if (n <= kDenseEigenLimit) {
    Eigen::MatrixXd b = -m.to_dense();
    for (std::size_t i = 0; i < n; ++i) {
      b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) +=
          cert.y[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b,
                                                      Eigen::EigenvaluesOnly);
    lambda = es.eigenvalues()(0);
  } else {
    double scale = 1.0;
    for (double v : cert.y) scale = std::max(scale, std::abs(v));
    const auto eig = internal::smallest_eigenvalue(
        apply, static_cast<Eigen::Index>(n), 0, 1e-6 * scale);
    if (eig.converged) {
      lambda = eig.value - eig.residual;
    } else {
      // Gershgorin: lambda_min(B) >= min_i B_ii - sum_{j != i} |B_ij|.
      cert.lambda_converged = false;
      const RankOne* r1 = m.rank1() ? &*m.rank1() : nullptr;
      double u_abs_sum = 0.0;
      if (r1) {
        for (double v : r1->u) u_abs_sum += std::abs(v);
      }
      lambda = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        const auto cols = m.row_indices(i);
        const auto vals = m.row_values(i);
        for (std::size_t e = 0; e < cols.size(); ++e) {
          if (cols[e] != i) radius += std::abs(vals[e]);
        }
        if (r1) radius += std::abs(r1->coefficient * r1->u[i]) * u_abs_sum;
        lambda = std::min(lambda, cert.y[i] - m.diagonal(i) - radius);
      }
    }
  }
  cert.lambda_min = lambda;
  double sum_y = 0.0;
  for (double v : cert.y) sum_y += v;
  cert.upper_bound =
      sum_y - static_cast<double>(n) * std::min(0.0, lambda);
  cert.gap = cert.upper_bound - sol.value;
  return cert;
}

std::vector<std::int8_t> round_leading_eigvec(const SdpSolution& sol,
                                              std::uint64_t seed) {
  const Factor& f = sol.factor;
  if (f.rows() == 0 || f.squaredNorm() == 0.0) {
    throw NumericError("cannot round an all-zero factor");
  }
  SplitMix64 rng = make_stream(seed, StreamPurpose::kRounding);
  Eigen::VectorXd v(f.rows());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.normal();
  v.normalize();
  for (int iter = 0; iter < 5000; ++iter) {
    Eigen::VectorXd next = f * (f.transpose() * v);
    const double norm = next.norm();
    if (norm == 0.0) {
      // Start orthogonal to the range of F; pick a row of F instead.
      Eigen::Index row;
      f.rowwise().squaredNorm().maxCoeff(&row);
      next = f * f.row(row).transpose();
      next.normalize();
      v = next;
      continue;
    }
    next /= norm;
    const double change = (next - v).norm();
    v = std::move(next);
    if (change < 1e-12) break;
  }
  std::vector<std::int8_t> signs(static_cast<std::size_t>(v.size()));
  int orientation = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (orientation == 0 && v(i) != 0.0) orientation = v(i) > 0.0 ? 1 : -1;
  }
  if (orientation == 0) orientation = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const int s = v(i) < 0.0 ? -1 : 1;
    signs[static_cast<std::size_t>(i)] =
        static_cast<std::int8_t>(v(i) == 0.0 ? 1 : s * orientation);
  }
  return signs;
}

}  // namespace ssbm
