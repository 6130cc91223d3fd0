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

#ifndef SSBM_CENSUS_H_
#define SSBM_CENSUS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "ssbm/model.h"

namespace ssbm {

// Signed count of revealed labels on the shell at exact graph distance
// `depth` from `vertex`.
struct CensusMargin {
  Vertex vertex = 0;
  std::uint32_t depth = 1;
  long margin = 0;
  // Revealed vertices on the shell.
  std::size_t support = 0;
};

struct EstimateReport {
  // Estimated labels of the unrevealed vertices, in ascending vertex order.
  std::vector<std::int8_t> estimates;
  // The vertices `estimates` refers to.
  std::vector<Vertex> unrevealed;
  // Full length-n assignment: revealed labels copied, estimates elsewhere.
  std::vector<std::int8_t> assignment;
  std::size_t ties_broken = 0;
  // |<x, xhat>| / (n - m) over the unrevealed vertices; NaN when the graph
  // carries no ground truth.
  double overlap = 0.0;
};

// |<truth, estimate>| / |unrevealed| restricted to the unrevealed indices.
double overlap_unrevealed(std::span<const std::int8_t> truth,
                          std::span<const std::int8_t> estimate,
                          const RevealedLabels& revealed);

// Fair coin for a tied vertex. Keyed by vertex so that one vertex's tie never
// changes another's.
std::int8_t tie_break_coin(std::uint64_t seed, Vertex v);

// Assembles a report from a full-length estimate. Revealed entries of
// `assignment` are overwritten with the revealed labels.
EstimateReport make_estimate_report(const Graph& g,
                                    const RevealedLabels& revealed,
                                    std::vector<std::int8_t> assignment,
                                    std::size_t ties_broken);

// Throws InvalidArgument when `vertex` is revealed or depth is zero.
CensusMargin census_margin(const Graph& g, const RevealedLabels& revealed,
                           Vertex vertex, std::uint32_t depth);

// Majority of revealed labels at distance `depth`, with a fair coin on ties.
// Throws InvalidArgument when every vertex is revealed.
EstimateReport census_estimate(const Graph& g, const RevealedLabels& revealed,
                               std::uint32_t depth, std::uint64_t seed);

struct LeaveOneOutResult {
  std::size_t estimates = 0;
  std::size_t correct = 0;
  std::size_t ties = 0;
  double accuracy() const {
    return estimates == 0 ? 0.0 : static_cast<double>(correct) / estimates;
  }
};

// Census accuracy on the revealed vertices themselves: each revealed vertex
// is predicted from the other revealed labels at distance `depth` (its own
// label hidden) and compared with the truth. With rho = 1 this measures
// P(sgn*(margin) = x_v) on every vertex of the graph.
LeaveOneOutResult census_leave_one_out(const Graph& g,
                                       const RevealedLabels& revealed,
                                       std::uint32_t depth,
                                       std::uint64_t seed);

}  // namespace ssbm

#endif  // SSBM_CENSUS_H_
