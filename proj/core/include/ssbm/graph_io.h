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

#ifndef SSBM_GRAPH_IO_H_
#define SSBM_GRAPH_IO_H_

#include <iosfwd>
#include <string>

#include "ssbm/model.h"

namespace ssbm {

// Plain-text instance format:
//
//   n m_edges
//   i j            (m_edges lines, 0-based, i < j)
//   L v_0 ... v_{n-1}
//   R v_0 ... v_{n-1}
//
// Label entries are written as +1, 0 or -1. The L and R lines are optional
// on input; a missing R line means nothing is revealed.
void write_instance(std::ostream& out, const Graph& g,
                    const RevealedLabels& revealed);
Instance read_instance(std::istream& in);

void save_instance(const std::string& path, const Graph& g,
                   const RevealedLabels& revealed);
Instance load_instance(const std::string& path);

}  // namespace ssbm

#endif  // SSBM_GRAPH_IO_H_
