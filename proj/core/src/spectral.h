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

#ifndef SSBM_SRC_SPECTRAL_H_
#define SSBM_SRC_SPECTRAL_H_

#include <cstdint>
#include <functional>

#include <Eigen/Dense>

namespace ssbm::internal {

using LinearMap = std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>;

struct ExtremeEigenvalue {
  double value = 0.0;
  // Residual norm of the returned Ritz pair.
  double residual = 0.0;
  bool converged = false;
};

// Smallest eigenvalue of a symmetric operator by Lanczos with full
// reorthogonalization, restarted from the best Ritz vector until the
// residual drops below `tol` or `max_restarts` is spent.
ExtremeEigenvalue smallest_eigenvalue(const LinearMap& apply, Eigen::Index dim,
                                      std::uint64_t seed, double tol,
                                      int krylov_dim = 80,
                                      int max_restarts = 40);

}  // namespace ssbm::internal

#endif  // SSBM_SRC_SPECTRAL_H_
