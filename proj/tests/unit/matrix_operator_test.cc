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

#include "ssbm/matrix_operator.h"

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

namespace ssbm {
namespace {

MatrixOperator random_operator(std::size_t dim, std::uint64_t seed,
                               bool with_rank1, double shift) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> w(-2.0, 2.0);
  std::bernoulli_distribution keep(0.3);
  std::vector<Triplet> entries;
  for (std::uint32_t i = 0; i < dim; ++i) {
    for (std::uint32_t j = i; j < dim; ++j) {
      if (keep(rng)) entries.push_back({i, j, w(rng)});
    }
  }
  std::optional<RankOne> r;
  if (with_rank1) {
    RankOne ro{std::vector<double>(dim), w(rng)};
    for (double& u : ro.u) u = w(rng);
    r = ro;
  }
  return MatrixOperator(dim, entries, r, shift);
}

TEST(MatrixOperator, DenseAgreesWithMatvecOnBasisVectors) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t dim = 5 + seed * 6;
    const MatrixOperator m = random_operator(dim, seed, seed % 2 == 0, 0.3);
    const Eigen::MatrixXd dense = m.to_dense();
    EXPECT_TRUE(dense.isApprox(dense.transpose()));
    for (std::size_t k = 0; k < dim; ++k) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
      e(k) = 1.0;
      const Eigen::VectorXd col = m.multiply(e);
      for (std::size_t i = 0; i < dim; ++i) {
        EXPECT_NEAR(col(i), dense(i, k), 1e-12);
        EXPECT_NEAR(m.entry(i, k), dense(i, k), 1e-12);
      }
    }
  }
}

TEST(MatrixOperator, EntryFormula) {
  std::vector<Triplet> entries{{0, 1, 2.0}, {1, 1, 5.0}, {1, 0, 1.0}};
  MatrixOperator m(3, entries, RankOne{{1.0, 2.0, 3.0}, -0.5}, 0.25);
  // Duplicates (0,1) and (1,0) are summed.
  EXPECT_DOUBLE_EQ(m.sparse_entry(0, 1), 3.0);
  EXPECT_DOUBLE_EQ(m.entry(0, 1), 3.0 - 0.5 * 2.0);
  EXPECT_DOUBLE_EQ(m.entry(1, 1), 5.0 - 0.5 * 4.0 + 0.25);
  EXPECT_DOUBLE_EQ(m.entry(2, 2), -0.5 * 9.0 + 0.25);
  EXPECT_DOUBLE_EQ(m.trace(), m.to_dense().trace());
}

TEST(MatrixOperator, PrincipalSubmatrix) {
  const MatrixOperator m = random_operator(12, 3, true, -0.1);
  const std::vector<std::uint32_t> keep{7, 2, 9, 0};
  const Eigen::MatrixXd sub = m.principal_submatrix(keep).to_dense();
  const Eigen::MatrixXd dense = m.to_dense();
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      EXPECT_NEAR(sub(i, j), dense(keep[i], keep[j]), 1e-12);
    }
  }
}

TEST(MatrixOperator, FromDenseSymmetrizes) {
  Eigen::MatrixXd a(2, 2);
  a << 1, 4, 0, 3;
  const MatrixOperator m = MatrixOperator::from_dense(a);
  EXPECT_DOUBLE_EQ(m.entry(0, 1), 2.0);
  EXPECT_DOUBLE_EQ(m.entry(1, 0), 2.0);
  EXPECT_DOUBLE_EQ(m.entry(1, 1), 3.0);
}

TEST(MatrixOperator, ScaledAndFinite) {
  const MatrixOperator m = random_operator(9, 4, true, 0.5);
  EXPECT_TRUE(m.scaled(-3.0).to_dense().isApprox(-3.0 * m.to_dense()));
  EXPECT_TRUE(m.all_finite());
  std::vector<Triplet> bad{{0, 0, NAN}};
  EXPECT_FALSE(MatrixOperator(1, bad).all_finite());
}

}  // namespace
}  // namespace ssbm
