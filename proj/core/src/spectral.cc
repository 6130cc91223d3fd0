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

#include "spectral.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ssbm/rng.h"

namespace ssbm::internal {

ExtremeEigenvalue smallest_eigenvalue(const LinearMap& apply, Eigen::Index dim,
                                      std::uint64_t seed, double tol,
                                      int krylov_dim, int max_restarts) {
  ExtremeEigenvalue best;
  if (dim == 0) return best;
  SplitMix64 rng = make_stream(seed, StreamPurpose::kOracle, 0x1a7c05);
  Eigen::VectorXd start(dim);
  for (Eigen::Index i = 0; i < dim; ++i) start(i) = rng.normal();
  start.normalize();

  const Eigen::Index steps = std::min<Eigen::Index>(krylov_dim, dim);
  Eigen::MatrixXd basis(dim, steps);
  Eigen::VectorXd w(dim);
  for (int restart = 0; restart <= max_restarts; ++restart) {
    std::vector<double> alpha, beta;
    basis.col(0) = start;
    Eigen::Index used = 0;
    for (Eigen::Index j = 0; j < steps; ++j) {
      apply(basis.col(j), w);
      const double a = basis.col(j).dot(w);
      alpha.push_back(a);
      used = j + 1;
      // Full reorthogonalization, twice for stability.
      for (int pass = 0; pass < 2; ++pass) {
        w -= basis.leftCols(j + 1) *
             (basis.leftCols(j + 1).transpose() * w).eval();
      }
      const double b = w.norm();
      if (j + 1 == steps || b < 1e-13) break;
      beta.push_back(b);
      basis.col(j + 1) = w / b;
    }
    Eigen::VectorXd diag(used);
    Eigen::VectorXd off(std::max<Eigen::Index>(used - 1, 0));
    for (Eigen::Index i = 0; i < used; ++i) diag(i) = alpha[i];
    for (Eigen::Index i = 0; i + 1 < used; ++i) off(i) = beta[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, off, Eigen::ComputeEigenvectors);
    const Eigen::VectorXd ritz_coeffs = tri.eigenvectors().col(0);
    Eigen::VectorXd ritz = basis.leftCols(used) * ritz_coeffs;
    ritz.normalize();
    apply(ritz, w);
    const double theta = ritz.dot(w);
    const double residual = (w - theta * ritz).norm();
    best.value = theta;
    best.residual = residual;
    if (residual <= tol) {
      best.converged = true;
      return best;
    }
    start = ritz;
  }
  return best;
}

}  // namespace ssbm::internal
