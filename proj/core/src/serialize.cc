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

#include "ssbm/serialize.h"

#include <cmath>

#include "json.hpp"

namespace ssbm {
namespace {

using nlohmann::json;

json number_or_null(double x) {
  return std::isfinite(x) ? json(x) : json(nullptr);
}

json sdp_json(const SdpSolution& sol) {
  return {{"value", number_or_null(sol.value)},
          {"sweeps", sol.sweeps_used},
          {"converged", sol.converged}};
}

}  // namespace

std::string to_json(const EstimateReport& report) {
  json estimates = json::array();
  for (std::size_t k = 0; k < report.unrevealed.size(); ++k) {
    estimates.push_back({report.unrevealed[k], report.estimates[k]});
  }
  return json{{"overlap", number_or_null(report.overlap)},
              {"ties", report.ties_broken},
              {"estimates", std::move(estimates)}}
      .dump();
}

std::string to_json(const SdpSolution& sol) { return sdp_json(sol).dump(); }

std::string to_json(const CsdpSolution& sol) {
  json j = sdp_json(sol.inner);
  j["value"] = number_or_null(sol.value);
  j["margin00"] = number_or_null(sol.margin00);
  j["revealed"] = sol.sigma0.size() == 0 ? 0 : 1;
  return j.dump();
}

std::string to_json(const TestOutcome& outcome) {
  return json{{"statistic", number_or_null(outcome.statistic)},
              {"threshold", outcome.threshold},
              {"decision", outcome.decision},
              {"delta", outcome.delta_used},
              {"rho0", outcome.rho0}}
      .dump();
}

std::string to_json(const SandwichReport& report) {
  return json{{"lower", number_or_null(report.lower)},
              {"mid", number_or_null(report.mid)},
              {"upper", number_or_null(report.upper)},
              {"margin00", number_or_null(report.margin00)},
              {"tau", report.tau},
              {"submatrix_holds", report.submatrix_holds},
              {"sandwich_holds", report.sandwich_holds},
              {"applicable", report.applicable},
              {"holds", report.holds}}
      .dump();
}

}  // namespace ssbm
