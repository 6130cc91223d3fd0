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

#include "ssbm/model.h"

#include <cmath>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "ssbm/errors.h"
#include "ssbm/matrix_operator.h"

namespace ssbm {
namespace {

TEST(Snr, Examples) {
  EXPECT_NEAR(snr(5, 2), 9.0 / 14.0, 1e-15);
  EXPECT_NEAR(snr(9, 2), 49.0 / 22.0, 1e-15);
  EXPECT_EQ(snr(3, 3), 0.0);
  EXPECT_THROW(snr(0, 0), InvalidArgument);
}

TEST(ModelParams, DerivedQuantities) {
  ModelParams p{1000, 12, 5, 0.2, 1};
  EXPECT_DOUBLE_EQ(p.d(), 8.5);
  EXPECT_EQ(p.m(), 200u);
  EXPECT_EQ((ModelParams{10, 1, 1, 0.35, 0}).m(), 2u);
  EXPECT_EQ((ModelParams{10, 1, 1, 1.0, 0}).m(), 10u);
}

TEST(ModelParams, ValidateRejectsBadInput) {
  EXPECT_THROW((ModelParams{7, 1, 1, 0, 0}).validate(), InvalidArgument);
  EXPECT_THROW((ModelParams{0, 1, 1, 0, 0}).validate(), InvalidArgument);
  EXPECT_THROW((ModelParams{4, 5, 1, 0, 0}).validate(), InvalidArgument);
  EXPECT_THROW((ModelParams{4, 2, 3, 0, 0}).validate(), InvalidArgument);
  EXPECT_THROW((ModelParams{4, 2, 1, 1.5, 0}).validate(), InvalidArgument);
  EXPECT_THROW((ModelParams{4, -1, -2, 0, 0}).validate(), InvalidArgument);
  EXPECT_THROW(sample_instance({6, 7, 1, 0, 0}), InvalidArgument);
  EXPECT_NO_THROW((ModelParams{4, 4, 4, 1, 0}).validate());
}

TEST(Graph, RejectsMalformedEdges) {
  Labels x({1, -1, 1, -1});
  std::vector<std::pair<Vertex, Vertex>> loop{{1, 1}};
  std::vector<std::pair<Vertex, Vertex>> dup{{0, 1}, {1, 0}};
  std::vector<std::pair<Vertex, Vertex>> range{{0, 4}};
  EXPECT_THROW(Graph(4, loop, x), InvalidArgument);
  EXPECT_THROW(Graph(4, dup, x), InvalidArgument);
  EXPECT_THROW(Graph(4, range, x), InvalidArgument);
  EXPECT_THROW(Labels({1, 1, 1, -1}), InvalidArgument);
  EXPECT_THROW(Labels({1, 0}), InvalidArgument);
}

TEST(Graph, AdjacencyIsSortedAndSymmetric) {
  std::vector<std::pair<Vertex, Vertex>> edges{{3, 0}, {0, 1}, {2, 0}, {1, 2}};
  Graph g(4, edges, Labels({1, -1, 1, -1}));
  EXPECT_EQ(g.num_edges(), 4u);
  const auto nb = g.neighbors(0);
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()),
            (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(3, 2));
  const auto list = g.edge_list();
  EXPECT_EQ(list.front(), (std::pair<Vertex, Vertex>{0, 1}));
  EXPECT_EQ(list.size(), 4u);
}

TEST(SampleInstance, EmptyGraphWithoutReveals) {
  const Instance inst = sample_instance({4, 0, 0, 0, 17});
  EXPECT_EQ(inst.graph.num_edges(), 0u);
  EXPECT_EQ(inst.revealed.num_revealed(), 0u);
}

TEST(SampleInstance, ProbabilityOneGivesCompleteGraph) {
  const Instance inst = sample_instance({4, 4, 4, 1, 17});
  EXPECT_EQ(inst.graph.num_edges(), 6u);
  EXPECT_EQ(inst.revealed.num_revealed(), 4u);
  for (Vertex v = 0; v < 4; ++v) {
    EXPECT_EQ(inst.revealed[v], inst.graph.labels()[v]);
  }
}

TEST(SampleInstance, PartitionAndRevealAreBalancedAndTruthful) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    ModelParams p{200, 9, 2, 0.3, seed};
    const Instance inst = sample_instance(p);
    const auto x = inst.graph.labels().values();
    EXPECT_EQ(std::accumulate(x.begin(), x.end(), 0), 0);
    EXPECT_EQ(inst.revealed.num_revealed(), p.m());
    EXPECT_EQ(inst.revealed.balance(), 0);
    for (Vertex v : inst.revealed.revealed()) {
      EXPECT_EQ(inst.revealed[v], x[v]);
    }
    for (Vertex u = 0; u < p.n; ++u) {
      const auto nb = inst.graph.neighbors(u);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (Vertex w : nb) {
        EXPECT_NE(w, u);
        EXPECT_TRUE(inst.graph.has_edge(w, u));
      }
    }
  }
}

TEST(SampleInstance, DeterministicGivenSeed) {
  ModelParams p{500, 12, 5, 0.2, 99};
  const Instance first = sample_instance(p);
  const Instance second = sample_instance(p);
  EXPECT_TRUE(first.graph == second.graph);
  EXPECT_TRUE(first.revealed == second.revealed);
  p.seed = 100;
  EXPECT_FALSE(sample_instance(p).graph == first.graph);
}

TEST(SampleInstance, RevealDoesNotDependOnEdges) {
  const Instance dense = sample_instance({300, 12, 5, 0.2, 4});
  const Instance sparse = sample_instance({300, 3, 1, 0.2, 4});
  EXPECT_TRUE(dense.graph.labels() == sparse.graph.labels());
  EXPECT_TRUE(dense.revealed == sparse.revealed);
}

TEST(SampleInstance, PartitionIsUniform) {
  // Each vertex lands in the +1 community with probability 1/2.
  const int seeds = 4000;
  int plus = 0;
  for (int s = 0; s < seeds; ++s) {
    plus += sample_instance({10, 0, 0, 0, static_cast<std::uint64_t>(s)})
                .graph.labels()[3] == 1;
  }
  EXPECT_NEAR(static_cast<double>(plus) / seeds, 0.5, 4 * 0.5 / std::sqrt(seeds));
}

TEST(SampleInstance, EdgeCountsMatchBinomialMoments) {
  const std::uint32_t n = 1000;
  const double a = 12, b = 5;
  const double within_pairs = 2.0 * (n / 2) * (n / 2 - 1) / 2.0;
  const double cross_pairs = (n / 2.0) * (n / 2.0);
  const double pa = a / n, pb = b / n;
  const double mean_within = within_pairs * pa;
  const double mean_cross = cross_pairs * pb;
  const double sd_within = std::sqrt(within_pairs * pa * (1 - pa));
  const double sd_cross = std::sqrt(cross_pairs * pb * (1 - pb));
  EXPECT_NEAR(mean_within + mean_cross, 4244.0, 1e-9);

  const int seeds = 200;
  double total = 0.0;
  for (int s = 0; s < seeds; ++s) {
    const Instance inst =
        sample_instance({n, a, b, 0, static_cast<std::uint64_t>(s)});
    const auto x = inst.graph.labels().values();
    double within = 0, cross = 0;
    for (const auto& [u, v] : inst.graph.edge_list()) {
      (x[u] == x[v] ? within : cross) += 1;
    }
    EXPECT_LT(std::fabs(within - mean_within), 4 * sd_within);
    EXPECT_LT(std::fabs(cross - mean_cross), 4 * sd_cross);
    total += within + cross;
  }
  const double sd_mean =
      std::sqrt(sd_within * sd_within + sd_cross * sd_cross) / std::sqrt(seeds);
  EXPECT_NEAR(total / seeds, 4244.0, 4 * sd_mean);
}

TEST(SampleErdosRenyi, EdgeCount) {
  const std::uint32_t n = 400;
  const double p = 0.02;
  const double pairs = n * (n - 1) / 2.0;
  double total = 0.0;
  for (int s = 0; s < 50; ++s) {
    total += sample_erdos_renyi(n, p, s).num_edges();
  }
  EXPECT_NEAR(total / 50, pairs * p, 4 * std::sqrt(pairs * p * (1 - p) / 50));
  EXPECT_EQ(sample_erdos_renyi(6, 1.0, 1).num_edges(), 15u);
  EXPECT_THROW(sample_erdos_renyi(6, 1.5, 1), InvalidArgument);
}

TEST(CenteredAdjacency, EmptyGraphIsZero) {
  const Instance inst = sample_instance({6, 0, 0, 0, 1});
  const MatrixOperator m = centered_adjacency(inst.graph, 0.0);
  EXPECT_EQ(m.to_dense().norm(), 0.0);
}

TEST(CenteredAdjacency, CompleteGraph) {
  const Instance inst = sample_instance({4, 4, 4, 0, 1});
  const Eigen::MatrixXd m = centered_adjacency(inst.graph, 3.0).to_dense();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_NEAR(m(i, j), i == j ? -0.75 : 0.25, 1e-15);
    }
  }
  EXPECT_THROW(centered_adjacency(inst.graph, -1.0), InvalidArgument);
}

TEST(CenteredAdjacency, RowSumsCentreOnZero) {
  const std::uint32_t n = 1000;
  double mean = 0.0;
  const int seeds = 20;
  for (int s = 0; s < seeds; ++s) {
    const Instance inst =
        sample_instance({n, 12, 5, 0, static_cast<std::uint64_t>(s)});
    const MatrixOperator m = centered_adjacency(inst.graph, 8.5);
    const Eigen::VectorXd sums = m.multiply(Eigen::VectorXd::Ones(n));
    mean += sums.mean();
  }
  // Each row sum has variance about d; the grand mean averages n * seeds.
  EXPECT_NEAR(mean / seeds, 0.0, 4 * std::sqrt(8.5 / (n * seeds)) + 0.01);
}

}  // namespace
}  // namespace ssbm
