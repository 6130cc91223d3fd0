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

#include "ssbm/csdp.h"

#include <algorithm>
#include <cmath>

#include "ssbm/errors.h"

namespace ssbm {

AggregatedOperator aggregate(const MatrixOperator& m,
                             const RevealedLabels& revealed) {
  const std::size_t n = m.dim();
  if (revealed.size() != n) {
    throw InvalidArgument("revealed labels do not match operator dimension");
  }
  if (revealed.balance() != 0) {
    throw InvalidArgument(
        "aggregation needs a balanced reveal (revealed labels must sum to 0)");
  }
  AggregatedOperator agg;
  agg.index_map = revealed.unrevealed();
  const std::size_t revealed_count = revealed.num_revealed();
  const std::size_t dim = agg.index_map.size() + 1;

  // position[v] = aggregated index of an unrevealed v; 0 marks revealed.
  std::vector<std::uint32_t> position(n, 0);
  for (std::size_t k = 0; k < agg.index_map.size(); ++k) {
    position[agg.index_map[k]] = static_cast<std::uint32_t>(k + 1);
  }

  std::vector<Triplet> entries;
  std::vector<double> margin_row(dim, 0.0);
  double block_sum = 0.0;
  for (Vertex i : revealed.revealed()) {
    const double xi = revealed[i];
    const auto cols = m.row_indices(i);
    const auto vals = m.row_values(i);
    for (std::size_t e = 0; e < cols.size(); ++e) {
      const std::uint32_t j = cols[e];
      if (revealed.is_revealed(j)) {
        block_sum += xi * revealed[j] * vals[e];
      } else {
        margin_row[position[j]] += xi * vals[e];
      }
    }
  }
  for (Vertex i : agg.index_map) {
    const std::uint32_t pi = position[i];
    const auto cols = m.row_indices(i);
    const auto vals = m.row_values(i);
    for (std::size_t e = 0; e < cols.size(); ++e) {
      const std::uint32_t pj = position[cols[e]];
      if (pj >= pi) entries.push_back({pi, pj, vals[e]});
    }
  }
  for (std::size_t j = 1; j < dim; ++j) {
    if (margin_row[j] != 0.0) {
      entries.push_back({0, static_cast<std::uint32_t>(j), margin_row[j]});
    }
  }

  const double shift = m.diag_shift();
  std::optional<RankOne> rank1;
  double rank1_margin = 0.0;
  if (m.rank1()) {
    const RankOne& r = *m.rank1();
    double s = 0.0;
    for (Vertex i : revealed.revealed()) s += revealed[i] * r.u[i];
    RankOne folded{std::vector<double>(dim), r.coefficient};
    folded.u[0] = s;
    for (std::size_t k = 0; k < agg.index_map.size(); ++k) {
      folded.u[k + 1] = r.u[agg.index_map[k]];
    }
    rank1_margin = r.coefficient * s * s;
    rank1 = std::move(folded);
  }
  // The diagonal shift lands once on entry (0,0); the revealed block owes it
  // m times.
  const double corner =
      block_sum + shift * (static_cast<double>(revealed_count) - 1.0);
  if (corner != 0.0) entries.push_back({0, 0, corner});

  agg.margin00 =
      block_sum + rank1_margin + shift * static_cast<double>(revealed_count);
  agg.op = MatrixOperator(dim, entries, std::move(rank1), shift);
  return agg;
}

SdpSolution solve_sdp(const Graph& g, double d, const SolverConfig& cfg) {
  return solve_elliptope(centered_adjacency(g, d), cfg);
}

CsdpSolution solve_csdp(const Graph& g, const RevealedLabels& revealed,
                        double d, const SolverConfig& cfg) {
  const MatrixOperator centered = centered_adjacency(g, d);
  CsdpSolution sol;
  if (revealed.size() != g.num_vertices()) {
    throw InvalidArgument("revealed labels do not match the graph");
  }
  if (revealed.num_revealed() == 0) {
    // No constraints: the CSDP is the SDP itself.
    sol.inner = solve_elliptope(centered, cfg);
    sol.value = sol.inner.value;
    sol.index_map = revealed.unrevealed();
    return sol;
  }
  AggregatedOperator agg = aggregate(centered, revealed);
  sol.inner = solve_elliptope(agg.op, cfg);
  sol.value = sol.inner.value;
  sol.sigma0 = sol.inner.factor.row(0).transpose();
  sol.margin00 = agg.margin00;
  sol.index_map = std::move(agg.index_map);
  return sol;
}

EstimateReport estimate_unrevealed(const Graph& g, const CsdpSolution& sol,
                                   const RevealedLabels& revealed,
                                   std::uint64_t seed) {
  if (sol.sigma0.size() == 0) {
    return estimate_from_sdp(g, sol.inner, revealed, seed);
  }
  if (static_cast<std::size_t>(sol.inner.factor.rows()) !=
      sol.index_map.size() + 1) {
    throw InvalidArgument("CSDP solution does not match its index map");
  }
  std::vector<std::int8_t> assignment(g.num_vertices(), 0);
  std::size_t ties = 0;
  for (std::size_t k = 0; k < sol.index_map.size(); ++k) {
    const Vertex v = sol.index_map[k];
    const double dot =
        sol.inner.factor.row(static_cast<Eigen::Index>(k + 1)).dot(
            sol.sigma0.transpose());
    if (dot > 0.0) {
      assignment[v] = 1;
    } else if (dot < 0.0) {
      assignment[v] = -1;
    } else {
      assignment[v] = tie_break_coin(seed, v);
      ++ties;
    }
  }
  return make_estimate_report(g, revealed, std::move(assignment), ties);
}

EstimateReport estimate_from_sdp(const Graph& g, const SdpSolution& sol,
                                 const RevealedLabels& revealed,
                                 std::uint64_t seed) {
  std::vector<std::int8_t> signs = round_leading_eigvec(sol, seed);
  if (signs.size() != g.num_vertices()) {
    throw InvalidArgument("SDP solution does not match the graph");
  }
  return make_estimate_report(g, revealed, std::move(signs), 0);
}

TestOutcome detection_test(double statistic, std::uint32_t n, double a,
                           double b, std::optional<double> delta) {
  if (!(a > b)) throw InvalidArgument("detection test requires a > b");
  TestOutcome out;
  out.statistic = statistic;
  out.delta_used = delta.value_or((a - b) / 40.0);
  out.threshold = n * ((a - b) / 2.0 - out.delta_used);
  out.decision = statistic >= out.threshold ? 1 : 0;
  const double d = 0.5 * (a + b);
  out.rho0 = 1.0 - (a - b) / (30.0 * (1.0 + d));
  return out;
}

double solver_slack(std::uint32_t n, double d) {
  return 1e-3 * n * std::sqrt(std::max(d, 1.0));
}

SandwichReport sandwich_check(const Graph& g, const RevealedLabels& revealed,
                              double d, const SolverConfig& cfg) {
  const MatrixOperator centered = centered_adjacency(g, d);
  SandwichReport report;
  report.tau = solver_slack(g.num_vertices(), d);
  report.upper = solve_elliptope(centered, cfg).value;
  const CsdpSolution csdp = solve_csdp(g, revealed, d, cfg);
  report.mid = csdp.value;
  report.margin00 = csdp.margin00;
  const std::vector<Vertex> rest = revealed.unrevealed();
  report.lower =
      rest.empty()
          ? 0.0
          : solve_elliptope(centered.principal_submatrix(rest), cfg).value;
  report.submatrix_holds =
      report.lower <= report.mid - report.margin00 + report.tau;
  report.sandwich_holds = report.lower - report.tau <= report.mid &&
                          report.mid <= report.upper + report.tau;
  report.applicable = report.margin00 >= 0.0;
  report.holds = report.sandwich_holds || !report.applicable;
  return report;
}

}  // namespace ssbm
