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

#include "ssbm/census.h"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "ssbm/errors.h"
#include "ssbm/rng.h"

namespace ssbm {
namespace {

// Reusable truncated BFS. Visited marks are epoch stamps, so resetting costs
// nothing between sources.
class ShellScanner {
 public:
  explicit ShellScanner(std::size_t n) : stamp_(n, 0) {}

  // Sum and count of revealed labels at exact distance `depth` from source.
  std::pair<long, std::size_t> scan(const Graph& g,
                                    const RevealedLabels& revealed,
                                    Vertex source, std::uint32_t depth) {
    if (depth == 1) {
      long sum = 0;
      std::size_t support = 0;
      for (Vertex u : g.neighbors(source)) {
        if (revealed[u] != 0) {
          sum += revealed[u];
          ++support;
        }
      }
      return {sum, support};
    }
    ++epoch_;
    frontier_.assign(1, source);
    stamp_[source] = epoch_;
    for (std::uint32_t level = 1; level <= depth && !frontier_.empty();
         ++level) {
      next_.clear();
      for (Vertex v : frontier_) {
        for (Vertex u : g.neighbors(v)) {
          if (stamp_[u] == epoch_) continue;
          stamp_[u] = epoch_;
          next_.push_back(u);
        }
      }
      frontier_.swap(next_);
    }
    long sum = 0;
    std::size_t support = 0;
    for (Vertex u : frontier_) {
      if (revealed[u] != 0) {
        sum += revealed[u];
        ++support;
      }
    }
    return {sum, support};
  }

 private:
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<Vertex> frontier_;
  std::vector<Vertex> next_;
};

void check_sizes(const Graph& g, const RevealedLabels& revealed) {
  if (revealed.size() != g.num_vertices()) {
    throw InvalidArgument("revealed label vector does not match the graph");
  }
}

}  // namespace

double overlap_unrevealed(std::span<const std::int8_t> truth,
                          std::span<const std::int8_t> estimate,
                          const RevealedLabels& revealed) {
  if (truth.size() != revealed.size() || estimate.size() != revealed.size()) {
    throw InvalidArgument("overlap: vector lengths differ");
  }
  long dot = 0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (revealed[i] != 0) continue;
    dot += truth[i] * estimate[i];
    ++count;
  }
  if (count == 0) throw InvalidArgument("overlap: no unrevealed vertices");
  return static_cast<double>(std::labs(dot)) / static_cast<double>(count);
}

std::int8_t tie_break_coin(std::uint64_t seed, Vertex v) {
  return make_stream(seed, StreamPurpose::kCensusTie, v).coin() ? 1 : -1;
}

EstimateReport make_estimate_report(const Graph& g,
                                    const RevealedLabels& revealed,
                                    std::vector<std::int8_t> assignment,
                                    std::size_t ties_broken) {
  check_sizes(g, revealed);
  if (assignment.size() != g.num_vertices()) {
    throw InvalidArgument("assignment length does not match the graph");
  }
  EstimateReport report;
  report.unrevealed = revealed.unrevealed();
  for (Vertex v : revealed.revealed()) assignment[v] = revealed[v];
  report.estimates.reserve(report.unrevealed.size());
  for (Vertex v : report.unrevealed) report.estimates.push_back(assignment[v]);
  report.ties_broken = ties_broken;
  if (g.labels().size() == g.num_vertices() && !report.unrevealed.empty()) {
    report.overlap =
        overlap_unrevealed(g.labels().values(), assignment, revealed);
  } else {
    report.overlap = std::numeric_limits<double>::quiet_NaN();
  }
  report.assignment = std::move(assignment);
  return report;
}

CensusMargin census_margin(const Graph& g, const RevealedLabels& revealed,
                           Vertex vertex, std::uint32_t depth) {
  check_sizes(g, revealed);
  if (depth == 0) throw InvalidArgument("census depth must be at least 1");
  if (vertex >= g.num_vertices()) throw InvalidArgument("vertex out of range");
  if (revealed.is_revealed(vertex)) {
    throw InvalidArgument("census margin requested for a revealed vertex");
  }
  ShellScanner scanner(g.num_vertices());
  const auto [sum, support] = scanner.scan(g, revealed, vertex, depth);
  return CensusMargin{vertex, depth, sum, support};
}

EstimateReport census_estimate(const Graph& g, const RevealedLabels& revealed,
                               std::uint32_t depth, std::uint64_t seed) {
  check_sizes(g, revealed);
  if (depth == 0) throw InvalidArgument("census depth must be at least 1");
  if (revealed.num_revealed() == g.num_vertices()) {
    throw InvalidArgument("census estimate: every vertex is revealed");
  }
  ShellScanner scanner(g.num_vertices());
  std::vector<std::int8_t> assignment(g.num_vertices(), 0);
  std::size_t ties = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (revealed.is_revealed(v)) continue;
    const long margin = scanner.scan(g, revealed, v, depth).first;
    if (margin > 0) {
      assignment[v] = 1;
    } else if (margin < 0) {
      assignment[v] = -1;
    } else {
      assignment[v] = tie_break_coin(seed, v);
      ++ties;
    }
  }
  return make_estimate_report(g, revealed, std::move(assignment), ties);
}

LeaveOneOutResult census_leave_one_out(const Graph& g,
                                       const RevealedLabels& revealed,
                                       std::uint32_t depth,
                                       std::uint64_t seed) {
  check_sizes(g, revealed);
  if (depth == 0) throw InvalidArgument("census depth must be at least 1");
  if (g.labels().size() != g.num_vertices()) {
    throw InvalidArgument("leave-one-out accuracy needs ground-truth labels");
  }
  ShellScanner scanner(g.num_vertices());
  LeaveOneOutResult result;
  for (Vertex v : revealed.revealed()) {
    // v sits at distance 0 from itself, so it never lands on its own shell.
    const long margin = scanner.scan(g, revealed, v, depth).first;
    std::int8_t guess;
    if (margin > 0) {
      guess = 1;
    } else if (margin < 0) {
      guess = -1;
    } else {
      guess = tie_break_coin(seed, v);
      ++result.ties;
    }
    ++result.estimates;
    if (guess == g.labels()[v]) ++result.correct;
  }
  return result;
}

}  // namespace ssbm
