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

#ifndef SSBM_SERIALIZE_H_
#define SSBM_SERIALIZE_H_

#include <string>

#include "ssbm/census.h"
#include "ssbm/csdp.h"
#include "ssbm/sdp.h"

namespace ssbm {

// Compact JSON documents for the CLI and the harness.
std::string to_json(const EstimateReport& report);
// {"value", "sweeps", "converged"}
std::string to_json(const SdpSolution& sol);
std::string to_json(const CsdpSolution& sol);
std::string to_json(const TestOutcome& outcome);
std::string to_json(const SandwichReport& report);

}  // namespace ssbm

#endif  // SSBM_SERIALIZE_H_
