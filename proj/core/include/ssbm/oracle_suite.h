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

#ifndef SSBM_ORACLE_SUITE_H_
#define SSBM_ORACLE_SUITE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ssbm/bounds.h"
#include "ssbm/csdp.h"
#include "ssbm/matrix_operator.h"
#include "ssbm/model.h"
#include "ssbm/sdp.h"

namespace ssbm {

// A point of the constrained problem (sigma_i = x_i sigma_0 on revealed i)
// and its image in the aggregated problem.
struct FeasiblePoint {
  Factor full;
  // Row 0 is sigma_0, row j is the row of the j-th unrevealed vertex.
  Factor aggregated;
};

// Unit rows drawn uniformly from the sphere in R^rank.
FeasiblePoint random_feasible_point(const RevealedLabels& revealed,
                                    std::size_t rank, std::uint64_t seed);

// |<M, F F^T> - <M^agg, F' F'^T>| / max(1, |<M, F F^T>|).
double embedding_gap(const MatrixOperator& m, const AggregatedOperator& agg,
                     const FeasiblePoint& point);

struct OracleCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct OracleReport {
  std::vector<OracleCheck> checks;
  bool all_passed() const;
};

struct OracleOptions {
  std::uint64_t seed = 0x5eed;
  SolverConfig solver;
  // Replaceable so that tampered formulas can be shown to be caught.
  std::function<double(double, double)> delta = ssbm::delta_gap;
  std::function<AggregatedOperator(const MatrixOperator&,
                                   const RevealedLabels&)>
      aggregate = ssbm::aggregate;
};

// Exact-oracle properties at fixed seeds: binomial gap against delta, exact
// cut norm against brute force, Grothendieck bound, cut-norm concentration,
// sandwich and submatrix bounds, embedding identity, erf against its Taylor
// series and the dual certificate of x x^T.
OracleReport run_oracle_suite(const OracleOptions& options = {});

}  // namespace ssbm

#endif  // SSBM_ORACLE_SUITE_H_
