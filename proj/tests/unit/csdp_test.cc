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

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"
#include "ssbm/errors.h"
#include "ssbm/oracle_suite.h"

namespace ssbm {
namespace {

SolverConfig config(std::uint64_t seed) {
  SolverConfig cfg;
  cfg.seed = seed;
  return cfg;
}

Eigen::MatrixXd dense_centered(const Graph& g, double d) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  return testing::dense_adjacency(g) -
         Eigen::MatrixXd::Constant(n, n, d / static_cast<double>(n));
}

TEST(Aggregate, NothingRevealedBordersWithZeros) {
  const Instance inst = sample_instance({10, 6, 2, 0, 1});
  const MatrixOperator m = centered_adjacency(inst.graph, 4);
  const AggregatedOperator agg = aggregate(m, inst.revealed);
  ASSERT_EQ(agg.op.dim(), 11u);
  EXPECT_EQ(agg.margin00, 0.0);
  const Eigen::MatrixXd a = agg.op.to_dense();
  EXPECT_NEAR(a.row(0).norm(), 0.0, 1e-15);
  EXPECT_TRUE(a.bottomRightCorner(10, 10).isApprox(m.to_dense()));
}

TEST(Aggregate, HandWorkedFourVertexCase) {
  std::vector<Triplet> e{{0, 2, 1.0}};
  const MatrixOperator m(4, e);
  const RevealedLabels rev({1, 0, -1, 0});
  const AggregatedOperator agg = aggregate(m, rev);
  EXPECT_EQ(agg.margin00, -2.0);
  const Eigen::MatrixXd a = agg.op.to_dense();
  EXPECT_EQ(a(0, 0), -2.0);
  EXPECT_EQ(a(0, 1), 0.0);
  EXPECT_EQ(a(0, 2), 0.0);
  EXPECT_EQ(agg.index_map, (std::vector<Vertex>{1, 3}));
}

TEST(Aggregate, FullyRevealedIsOneByOne) {
  const Instance inst = sample_instance({12, 6, 2, 1.0, 3});
  const MatrixOperator m = centered_adjacency(inst.graph, 4);
  const AggregatedOperator agg = aggregate(m, inst.revealed);
  ASSERT_EQ(agg.op.dim(), 1u);
  Eigen::VectorXd x(12);
  for (int i = 0; i < 12; ++i) x(i) = inst.revealed[i];
  EXPECT_NEAR(agg.margin00, x.dot(m.to_dense() * x), 1e-12);
  EXPECT_NEAR(agg.op.entry(0, 0), agg.margin00, 1e-12);
}

TEST(Aggregate, MatchesDefiningEquations) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = sample_instance({40, 9, 2, 0.3, seed});
    const double d = 5.5;
    const MatrixOperator m = centered_adjacency(inst.graph, d);
    const AggregatedOperator agg = aggregate(m, inst.revealed);
    const Eigen::MatrixXd want = testing::dense_aggregate(
        dense_centered(inst.graph, d), inst.revealed);
    const Eigen::MatrixXd got = agg.op.to_dense();
    ASSERT_EQ(got.rows(), want.rows());
    EXPECT_LE((got - want).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(agg.margin00, want(0, 0), 1e-12);
    // The rank-one part cancels on the margin row.
    ASSERT_TRUE(agg.op.rank1().has_value());
    EXPECT_EQ(agg.op.rank1()->u[0], 0.0);
  }
}

TEST(Aggregate, DenseOperatorWithShift) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd w(16, 16);
  for (int i = 0; i < 16; ++i) {
    for (int j = i; j < 16; ++j) w(i, j) = w(j, i) = normal(rng);
  }
  std::vector<Triplet> entries;
  for (std::uint32_t i = 0; i < 16; ++i) {
    for (std::uint32_t j = i; j < 16; ++j) entries.push_back({i, j, w(i, j)});
  }
  const MatrixOperator m(16, entries, RankOne{std::vector<double>(16, 0.5), 2.0},
                         0.7);
  const RevealedLabels rev({1, 0, 0, -1, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 1, -1});
  const AggregatedOperator agg = aggregate(m, rev);
  const Eigen::MatrixXd want = testing::dense_aggregate(m.to_dense(), rev);
  EXPECT_LE((agg.op.to_dense() - want).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(agg.margin00, want(0, 0), 1e-12);
}

TEST(Aggregate, RejectsUnbalancedReveal) {
  const MatrixOperator m(4, {});
  EXPECT_THROW(aggregate(m, RevealedLabels({1, 1, 0, 0})), InvalidArgument);
  EXPECT_THROW(aggregate(m, RevealedLabels({1, -1, 0})), InvalidArgument);
}

TEST(Aggregate, EmbeddingPreservesObjective) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = sample_instance({20, 9, 2, 0.3, seed});
    ASSERT_EQ(inst.revealed.num_revealed(), 6u);
    const Eigen::MatrixXd full = dense_centered(inst.graph, 5.5);
    const MatrixOperator m = centered_adjacency(inst.graph, 5.5);
    const AggregatedOperator agg = aggregate(m, inst.revealed);
    const FeasiblePoint p = random_feasible_point(inst.revealed, 5, seed);
    const double lhs = (p.full.transpose() * full * p.full).trace();
    const Eigen::MatrixXd dense_agg =
        testing::dense_aggregate(full, inst.revealed);
    const double rhs =
        (p.aggregated.transpose() * dense_agg * p.aggregated).trace();
    EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, std::fabs(lhs)));
    EXPECT_LE(embedding_gap(m, agg, p), 1e-9);
  }
}

TEST(SolveCsdp, NothingRevealedReproducesSdpExactly) {
  const Instance inst = sample_instance({300, 9, 2, 0, 4});
  const SdpSolution sdp = solve_sdp(inst.graph, 5.5, config(8));
  const CsdpSolution csdp = solve_csdp(inst.graph, inst.revealed, 5.5, config(8));
  EXPECT_EQ(csdp.value, sdp.value);
  EXPECT_TRUE(csdp.inner.factor == sdp.factor);
  EXPECT_EQ(csdp.sigma0.size(), 0);
  const EstimateReport a =
      estimate_unrevealed(inst.graph, csdp, inst.revealed, 3);
  const EstimateReport b = estimate_from_sdp(inst.graph, sdp, inst.revealed, 3);
  EXPECT_EQ(a.assignment, b.assignment);
}

TEST(SolveCsdp, FullyRevealedValueIsMargin) {
  const Instance inst = sample_instance({50, 9, 2, 1.0, 4});
  const CsdpSolution sol = solve_csdp(inst.graph, inst.revealed, 5.5, config(1));
  EXPECT_NEAR(sol.value, sol.margin00, 1e-12);
  EXPECT_TRUE(sol.index_map.empty());
}

TEST(SolveCsdp, AgreesWithTiedFormulationOnFullMatrix) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = sample_instance({20, 9, 2, 0.3, 50 + seed});
    const Eigen::MatrixXd full = dense_centered(inst.graph, 5.5);
    const CsdpSolution sol =
        solve_csdp(inst.graph, inst.revealed, 5.5, config(seed));
    const double reference =
        testing::tied_mixing_csdp(full, inst.revealed, 8, 3000, seed);
    EXPECT_NEAR(sol.value, reference, 1e-4 * std::max(1.0, std::fabs(reference)))
        << "seed " << seed;
    EXPECT_EQ(sol.value, sol.inner.value);
  }
}

TEST(SolveCsdp, BetweenWitnessAndUnconstrainedValue) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance inst = sample_instance({300, 9, 2, 0.3, seed});
    const double d = 5.5;
    const double tau = solver_slack(300, d);
    const CsdpSolution csdp =
        solve_csdp(inst.graph, inst.revealed, d, config(seed));
    const SdpSolution sdp = solve_sdp(inst.graph, d, config(seed));
    Eigen::VectorXd x(300);
    for (int i = 0; i < 300; ++i) x(i) = inst.graph.labels()[i];
    const double witness = x.dot(centered_adjacency(inst.graph, d).multiply(x));
    EXPECT_GE(csdp.value, witness - tau);
    EXPECT_LE(csdp.value, sdp.value + tau);
  }
}

TEST(SolveCsdp, PlantedValueAboveWitnessScale) {
  const Instance inst = sample_instance({1000, 12, 5, 0.2, 2});
  const CsdpSolution sol = solve_csdp(inst.graph, inst.revealed, 8.5, config(2));
  EXPECT_GE(sol.value / 1000, 3.5 - 0.5);
}

TEST(EstimateUnrevealed, AlignedFactorGivesPerfectOverlap) {
  const Instance inst = sample_instance({40, 6, 2, 0.5, 9});
  CsdpSolution sol;
  sol.index_map = inst.revealed.unrevealed();
  sol.inner.factor = Factor::Zero(sol.index_map.size() + 1, 3);
  sol.inner.factor(0, 1) = 1.0;
  for (std::size_t k = 0; k < sol.index_map.size(); ++k) {
    sol.inner.factor(k + 1, 1) = inst.graph.labels()[sol.index_map[k]];
  }
  sol.sigma0 = sol.inner.factor.row(0).transpose();
  const EstimateReport r = estimate_unrevealed(inst.graph, sol, inst.revealed, 1);
  EXPECT_EQ(r.overlap, 1.0);
  EXPECT_EQ(r.ties_broken, 0u);
}

TEST(EstimateUnrevealed, OrthogonalFactorFallsBackToCoins) {
  const Instance inst = sample_instance({2000, 6, 2, 0.5, 9});
  CsdpSolution sol;
  sol.index_map = inst.revealed.unrevealed();
  sol.inner.factor = Factor::Zero(sol.index_map.size() + 1, 2);
  sol.inner.factor(0, 0) = 1.0;
  for (std::size_t k = 0; k < sol.index_map.size(); ++k) {
    sol.inner.factor(k + 1, 1) = 1.0;
  }
  sol.sigma0 = sol.inner.factor.row(0).transpose();
  const EstimateReport r = estimate_unrevealed(inst.graph, sol, inst.revealed, 4);
  EXPECT_EQ(r.ties_broken, 1000u);
  EXPECT_LT(r.overlap, 4.0 / std::sqrt(1000.0));
}

TEST(EstimateUnrevealed, SemiSupervisedBeatsUnsupervised) {
  double constrained = 0.0, plain = 0.0;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Instance inst = sample_instance({1000, 12, 5, 0.2, seed});
    const CsdpSolution csdp =
        solve_csdp(inst.graph, inst.revealed, 8.5, config(seed));
    const SdpSolution sdp = solve_sdp(inst.graph, 8.5, config(seed));
    constrained +=
        estimate_unrevealed(inst.graph, csdp, inst.revealed, seed).overlap;
    plain += estimate_from_sdp(inst.graph, sdp, inst.revealed, seed).overlap;
  }
  EXPECT_GT(constrained, plain);
}

TEST(DetectionTest, Constants) {
  const TestOutcome t = detection_test(0.0, 200, 9, 2);
  EXPECT_DOUBLE_EQ(t.threshold, 665.0);
  EXPECT_DOUBLE_EQ(t.delta_used, 7.0 / 40);
  EXPECT_NEAR(t.rho0, 1.0 - 7.0 / 195.0, 1e-15);
  EXPECT_EQ(t.decision, 0);
  EXPECT_EQ(detection_test(665.0, 200, 9, 2).decision, 1);
  EXPECT_EQ(detection_test(664.999, 200, 9, 2).decision, 0);
  EXPECT_DOUBLE_EQ(detection_test(0.0, 100, 5, 1, 0.5).threshold, 150.0);
  EXPECT_THROW(detection_test(0.0, 100, 2, 2), InvalidArgument);
  EXPECT_THROW(detection_test(0.0, 100, 1, 2), InvalidArgument);
}

TEST(SandwichCheck, NothingRevealed) {
  const Instance inst = sample_instance({200, 9, 2, 0, 3});
  const SandwichReport r = sandwich_check(inst.graph, inst.revealed, 5.5, config(3));
  EXPECT_EQ(r.lower, r.mid);
  EXPECT_EQ(r.mid, r.upper);
  EXPECT_TRUE(r.holds);
}

TEST(SandwichCheck, FullyRevealed) {
  const Instance inst = sample_instance({100, 9, 2, 1.0, 3});
  const SandwichReport r = sandwich_check(inst.graph, inst.revealed, 5.5, config(3));
  EXPECT_EQ(r.lower, 0.0);
  EXPECT_NEAR(r.mid, r.margin00, 1e-12);
  EXPECT_TRUE(r.submatrix_holds);
}

TEST(SandwichCheck, HoldsOnPlantedInstances) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Instance inst = sample_instance({400, 9, 2, 0.3, seed});
    const SandwichReport r =
        sandwich_check(inst.graph, inst.revealed, 5.5, config(seed));
    EXPECT_TRUE(r.submatrix_holds);
    EXPECT_TRUE(r.holds);
    EXPECT_DOUBLE_EQ(r.tau, 1e-3 * 400 * std::sqrt(5.5));
  }
}

TEST(MarginBlock, UsuallyNonNegativeUnderPlantedModel) {
  int nonnegative = 0;
  const int seeds = 100;
  for (int s = 0; s < seeds; ++s) {
    const Instance inst =
        sample_instance({1000, 12, 5, 0.2, static_cast<std::uint64_t>(s)});
    nonnegative +=
        aggregate(centered_adjacency(inst.graph, 8.5), inst.revealed).margin00 >=
        0.0;
  }
  EXPECT_GE(nonnegative, 95);
}

TEST(MarginBlock, MarginRowUnderNullModel) {
  // Under G(n, d/n) the margin entries are differences of Bin(m/2, d/n)
  // variables: mean |entry| <= d m / n, and the bordered margin matrix has
  // SDP value at most 2 d m (1 - m/n) + (2n - m) eps.
  const std::uint32_t n = 1000;
  const double d = 3.0;
  const double eps = 0.1;
  for (int s = 0; s < 3; ++s) {
    const Instance inst =
        sample_instance({n, d, d, 0.2, static_cast<std::uint64_t>(s)});
    const double m = inst.revealed.num_revealed();
    const AggregatedOperator agg =
        aggregate(centered_adjacency(inst.graph, d), inst.revealed);
    std::vector<Triplet> border{{0, 0, agg.margin00}};
    double abs_sum = 0.0;
    for (std::uint32_t j = 1; j < agg.op.dim(); ++j) {
      const double v = agg.op.entry(0, j);
      abs_sum += std::fabs(v);
      if (v != 0.0) border.push_back({0, j, v});
    }
    EXPECT_LE(abs_sum / (n - m), d * m / n + eps);
    const MatrixOperator b(agg.op.dim(), border);
    const double value = solve_elliptope(b, config(s)).value;
    EXPECT_LE(value, 2 * d * m * (1 - m / n) + (2 * n - m) * eps);
  }
}

}  // namespace
}  // namespace ssbm
