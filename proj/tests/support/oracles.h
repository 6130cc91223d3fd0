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

// Brute-force reference implementations used only by the tests. They are
// written directly from the definitions and share no code with the library.

#ifndef SSBM_TESTS_SUPPORT_ORACLES_H_
#define SSBM_TESTS_SUPPORT_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "ssbm/model.h"

namespace ssbm::testing {

// Revealed-label sum and count on the exact distance-t shell around v.
inline std::pair<long, std::size_t> naive_margin(const Graph& g,
                                                  const RevealedLabels& rev,
                                                  Vertex v, std::uint32_t t) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::queue<Vertex> q;
  dist[v] = 0;
  q.push(v);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  long margin = 0;
  std::size_t support = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (dist[u] == static_cast<int>(t) && rev.is_revealed(u)) {
      margin += rev[u];
      ++support;
    }
  }
  return {margin, support};
}

inline Eigen::MatrixXd dense_adjacency(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex w : g.neighbors(u)) a(u, w) = 1.0;
  }
  return a;
}

// The aggregated matrix written out entry by entry.
inline Eigen::MatrixXd dense_aggregate(const Eigen::MatrixXd& m,
                                       const RevealedLabels& rev) {
  std::vector<Vertex> rest;
  std::vector<Vertex> shown;
  for (Vertex i = 0; i < rev.size(); ++i) {
    (rev[i] == 0 ? rest : shown).push_back(i);
  }
  const auto dim = static_cast<Eigen::Index>(rest.size() + 1);
  Eigen::MatrixXd agg = Eigen::MatrixXd::Zero(dim, dim);
  for (Vertex i : shown) {
    for (Vertex j : shown) agg(0, 0) += m(i, j) * rev[i] * rev[j];
  }
  for (std::size_t j = 0; j < rest.size(); ++j) {
    double s = 0.0;
    for (Vertex i : shown) s += rev[i] * m(i, rest[j]);
    agg(0, j + 1) = s;
    agg(j + 1, 0) = s;
    for (std::size_t k = 0; k < rest.size(); ++k) {
      agg(j + 1, k + 1) = m(rest[j], rest[k]);
    }
  }
  return agg;
}

inline Eigen::MatrixXd random_unit_rows(Eigen::Index rows, Eigen::Index k,
                                        std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd f(rows, k);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index c = 0; c < k; ++c) f(i, c) = normal(rng);
    f.row(i).normalize();
  }
  return f;
}

// Plain coordinate ascent on the elliptope with a dense matrix.
inline double dense_mixing_sdp(const Eigen::MatrixXd& m, int k, int sweeps,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd f = random_unit_rows(n, k, rng);
  for (int s = 0; s < sweeps; ++s) {
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::RowVectorXd g = m.row(i) * f - m(i, i) * f.row(i);
      if (g.norm() > 0) f.row(i) = g / g.norm();
    }
  }
  return (f.transpose() * m * f).trace();
}

// The constrained problem on the full matrix: revealed rows are tied to
// x_i sigma_0 and sigma_0 is moved as one block. Nothing is aggregated.
inline double tied_mixing_csdp(const Eigen::MatrixXd& m,
                               const RevealedLabels& rev, int k, int sweeps,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd f = random_unit_rows(n, k, rng);
  Eigen::RowVectorXd sigma0 = random_unit_rows(1, k, rng).row(0);
  auto tie = [&] {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (rev[i] != 0) f.row(i) = rev[i] * sigma0;
    }
  };
  tie();
  for (int s = 0; s < sweeps; ++s) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (rev[i] != 0) continue;
      Eigen::RowVectorXd g = m.row(i) * f - m(i, i) * f.row(i);
      if (g.norm() > 0) f.row(i) = g / g.norm();
    }
    // The objective is linear in sigma_0 through the revealed/unrevealed
    // coupling; the revealed block itself is constant.
    Eigen::RowVectorXd g = Eigen::RowVectorXd::Zero(k);
    for (Eigen::Index i = 0; i < n; ++i) {
      if (rev[i] == 0) continue;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (rev[j] == 0) g += rev[i] * m(i, j) * f.row(j);
      }
    }
    if (g.norm() > 0) sigma0 = g / g.norm();
    tie();
  }
  return (f.transpose() * m * f).trace();
}

// sum(y) - n min(0, lambda_min(diag(y) - M)) with y_i = |g_i| + M_ii,
// eigenvalues from a dense solver.
inline double dense_dual_bound(const Eigen::MatrixXd& m,
                               const Eigen::MatrixXd& f) {
  const Eigen::Index n = m.rows();
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::RowVectorXd g = m.row(i) * f - m(i, i) * f.row(i);
    y(i) = g.norm() + m(i, i);
  }
  Eigen::MatrixXd s = Eigen::MatrixXd(y.asDiagonal()) - m;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
  const double lambda = eig.eigenvalues().minCoeff();
  return y.sum() - static_cast<double>(n) * std::min(0.0, lambda);
}

inline double cut_norm_brute(const Eigen::MatrixXd& m) {
  const auto r = static_cast<int>(m.rows());
  const auto c = static_cast<int>(m.cols());
  double best = -std::numeric_limits<double>::infinity();
  for (long s = 0; s < (1L << r); ++s) {
    for (long t = 0; t < (1L << c); ++t) {
      double sum = 0.0;
      for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) {
          sum += ((s >> i) & 1 ? -1 : 1) * ((t >> j) & 1 ? -1 : 1) * m(i, j);
        }
      }
      best = std::max(best, sum);
    }
  }
  return best;
}

inline double binomial_pmf(std::uint64_t trials, double p, std::uint64_t k) {
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == trials ? 1.0 : 0.0;
  const double nn = static_cast<double>(trials);
  const double kk = static_cast<double>(k);
  return std::exp(std::lgamma(nn + 1) - std::lgamma(kk + 1) -
                  std::lgamma(nn - kk + 1) + kk * std::log(p) +
                  (nn - kk) * std::log1p(-p));
}

struct Comparison {
  double greater = 0.0;
  double equal = 0.0;
  double less = 0.0;
};

// Full double sum over the joint law; fine for a few thousand trials.
inline Comparison naive_compare(std::uint64_t tx, double px, std::uint64_t ty,
                                double py) {
  std::vector<double> fx(tx + 1), fy(ty + 1);
  for (std::uint64_t k = 0; k <= tx; ++k) fx[k] = binomial_pmf(tx, px, k);
  for (std::uint64_t k = 0; k <= ty; ++k) fy[k] = binomial_pmf(ty, py, k);
  Comparison c;
  for (std::uint64_t i = 0; i <= tx; ++i) {
    if (fx[i] == 0.0) continue;
    for (std::uint64_t j = 0; j <= ty; ++j) {
      const double p = fx[i] * fy[j];
      if (i > j) {
        c.greater += p;
      } else if (i == j) {
        c.equal += p;
      } else {
        c.less += p;
      }
    }
  }
  return c;
}

}  // namespace ssbm::testing

#endif  // SSBM_TESTS_SUPPORT_ORACLES_H_
