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

#ifndef SSBM_MATRIX_OPERATOR_H_
#define SSBM_MATRIX_OPERATOR_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ssbm {

struct Triplet {
  std::uint32_t i;
  std::uint32_t j;
  double weight;
};

// Contributes coefficient * u u^T.
struct RankOne {
  std::vector<double> u;
  double coefficient = 0.0;
};

// Implicit symmetric matrix
//   M = S + c u u^T + shift I
// with S sparse. Rows of S are stored in CSR form with both triangles, so a
// row scan and a matrix-vector product cost O(nnz + dim).
class MatrixOperator {
 public:
  MatrixOperator() = default;
  // `entries` lists S by its upper triangle (i <= j); duplicates are summed.
  // Entries with i > j are transposed.
  MatrixOperator(std::size_t dim, std::span<const Triplet> entries,
                 std::optional<RankOne> rank1 = std::nullopt,
                 double diag_shift = 0.0);

  // Symmetrizes (A + A^T)/2 and stores it as a purely sparse operator.
  static MatrixOperator from_dense(const Eigen::MatrixXd& a);

  std::size_t dim() const { return dim_; }
  double diag_shift() const { return diag_shift_; }
  const std::optional<RankOne>& rank1() const { return rank1_; }

  // Sparse row i of S, diagonal included when present.
  std::span<const std::uint32_t> row_indices(std::size_t i) const {
    return {cols_.data() + row_ptr_[i], cols_.data() + row_ptr_[i + 1]};
  }
  std::span<const double> row_values(std::size_t i) const {
    return {vals_.data() + row_ptr_[i], vals_.data() + row_ptr_[i + 1]};
  }
  std::size_t nnz() const { return cols_.size(); }

  // Upper triangle of S.
  std::vector<Triplet> entries() const;

  double sparse_entry(std::size_t i, std::size_t j) const;
  double entry(std::size_t i, std::size_t j) const;
  double diagonal(std::size_t i) const { return entry(i, i); }
  // Sum of all diagonal entries.
  double trace() const;

  // y = M x.
  void multiply(std::span<const double> x, std::span<double> y) const;
  Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;

  // Principal submatrix on `keep` (in the given order).
  MatrixOperator principal_submatrix(std::span<const std::uint32_t> keep) const;

  MatrixOperator scaled(double c) const;

  Eigen::MatrixXd to_dense() const;

  // False when any stored number is NaN or infinite.
  bool all_finite() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::uint32_t> cols_;
  std::vector<double> vals_;
  std::optional<RankOne> rank1_;
  double diag_shift_ = 0.0;
};

}  // namespace ssbm

#endif  // SSBM_MATRIX_OPERATOR_H_
