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

#ifndef SSBM_SRC_SVG_H_
#define SSBM_SRC_SVG_H_

#include <span>
#include <string>
#include <vector>

#include "ssbm/experiment.h"

namespace ssbm::internal {

struct PlotLabels {
  std::string title;
  std::string x;
  std::string y;
};

struct Series {
  std::string label;
  std::vector<double> xs;
  std::vector<double> ys;
  bool dashed = false;
};

struct Box {
  std::string label;
  Stats stats;
};

// Self-contained SVG documents. Non-finite points are skipped.
std::string line_plot(const PlotLabels& labels, std::span<const Series> series);
std::string box_plot(const PlotLabels& labels, std::span<const Box> boxes);
// values[row][col] colours the cell at (xs[col], ys[row]); NaN is blank.
std::string heatmap(const PlotLabels& labels, std::span<const double> xs,
                    std::span<const double> ys,
                    const std::vector<std::vector<double>>& values);

}  // namespace ssbm::internal

#endif  // SSBM_SRC_SVG_H_
