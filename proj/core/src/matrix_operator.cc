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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ssbm/errors.h"

namespace ssbm {

MatrixOperator::MatrixOperator(std::size_t dim,
                               std::span<const Triplet> entries,
                               std::optional<RankOne> rank1,
                               double diag_shift)
    : dim_(dim), rank1_(std::move(rank1)), diag_shift_(diag_shift) {
  if (rank1_ && rank1_->u.size() != dim) {
    throw InvalidArgument("rank-one vector length does not match dimension");
  }
  struct Item {
    std::uint32_t row;
    std::uint32_t col;
    double weight;
  };
  std::vector<Item> items;
  items.reserve(2 * entries.size());
  for (const Triplet& t : entries) {
    if (t.i >= dim || t.j >= dim) {
      throw InvalidArgument("matrix entry index out of range");
    }
    items.push_back({t.i, t.j, t.weight});
    if (t.i != t.j) items.push_back({t.j, t.i, t.weight});
  }
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    return x.row != y.row ? x.row < y.row : x.col < y.col;
  });
  row_ptr_.assign(dim + 1, 0);
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (!cols_.empty() && k > 0 && items[k].row == items[k - 1].row &&
        items[k].col == items[k - 1].col) {
      vals_.back() += items[k].weight;
      continue;
    }
    cols_.push_back(items[k].col);
    vals_.push_back(items[k].weight);
    ++row_ptr_[items[k].row + 1];
  }
  std::partial_sum(row_ptr_.begin(), row_ptr_.end(), row_ptr_.begin());
}

MatrixOperator MatrixOperator::from_dense(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("matrix must be square");
  const auto n = static_cast<std::size_t>(a.rows());
  std::vector<Triplet> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double w = 0.5 * (a(i, j) + a(j, i));
      if (w != 0.0 || std::isnan(w)) {
        entries.push_back({static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j), w});
      }
    }
  }
  return MatrixOperator(n, entries);
}

std::vector<Triplet> MatrixOperator::entries() const {
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      if (cols_[k] >= i) {
        out.push_back({static_cast<std::uint32_t>(i), cols_[k], vals_[k]});
      }
    }
  }
  return out;
}

double MatrixOperator::sparse_entry(std::size_t i, std::size_t j) const {
  const auto first = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i]);
  const auto last = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[i + 1]);
  const auto it = std::lower_bound(first, last, static_cast<std::uint32_t>(j));
  if (it == last || *it != j) return 0.0;
  return vals_[static_cast<std::size_t>(it - cols_.begin())];
}

double MatrixOperator::entry(std::size_t i, std::size_t j) const {
  double value = sparse_entry(i, j);
  if (rank1_) value += rank1_->coefficient * rank1_->u[i] * rank1_->u[j];
  if (i == j) value += diag_shift_;
  return value;
}

double MatrixOperator::trace() const {
  double sum = diag_shift_ * static_cast<double>(dim_);
  for (std::size_t i = 0; i < dim_; ++i) sum += sparse_entry(i, i);
  if (rank1_) {
    double sq = 0.0;
    for (double x : rank1_->u) sq += x * x;
    sum += rank1_->coefficient * sq;
  }
  return sum;
}

void MatrixOperator::multiply(std::span<const double> x,
                              std::span<double> y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw InvalidArgument("vector length does not match operator dimension");
  }
  double proj = 0.0;
  if (rank1_) {
    for (std::size_t j = 0; j < dim_; ++j) proj += rank1_->u[j] * x[j];
    proj *= rank1_->coefficient;
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    double acc = diag_shift_ * x[i];
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      acc += vals_[k] * x[cols_[k]];
    }
    if (rank1_) acc += proj * rank1_->u[i];
    y[i] = acc;
  }
}

Eigen::VectorXd MatrixOperator::multiply(const Eigen::VectorXd& x) const {
  Eigen::VectorXd y(static_cast<Eigen::Index>(dim_));
  multiply(std::span<const double>(x.data(), dim_),
           std::span<double>(y.data(), dim_));
  return y;
}

MatrixOperator MatrixOperator::principal_submatrix(
    std::span<const std::uint32_t> keep) const {
  std::vector<std::int64_t> position(dim_, -1);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (keep[k] >= dim_) throw InvalidArgument("submatrix index out of range");
    position[keep[k]] = static_cast<std::int64_t>(k);
  }
  std::vector<Triplet> entries;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    const std::uint32_t i = keep[a];
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      const std::int64_t b = position[cols_[k]];
      if (b >= static_cast<std::int64_t>(a)) {
        entries.push_back({static_cast<std::uint32_t>(a),
                           static_cast<std::uint32_t>(b), vals_[k]});
      }
    }
  }
  std::optional<RankOne> sub_rank1;
  if (rank1_) {
    RankOne r{std::vector<double>(keep.size()), rank1_->coefficient};
    for (std::size_t a = 0; a < keep.size(); ++a) r.u[a] = rank1_->u[keep[a]];
    sub_rank1 = std::move(r);
  }
  return MatrixOperator(keep.size(), entries, std::move(sub_rank1),
                        diag_shift_);
}

MatrixOperator MatrixOperator::scaled(double c) const {
  MatrixOperator out = *this;
  for (double& v : out.vals_) v *= c;
  if (out.rank1_) out.rank1_->coefficient *= c;
  out.diag_shift_ *= c;
  return out;
}

Eigen::MatrixXd MatrixOperator::to_dense() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      m(static_cast<Eigen::Index>(i), cols_[k]) = vals_[k];
    }
  }
  if (rank1_) {
    const Eigen::Map<const Eigen::VectorXd> u(rank1_->u.data(), n);
    m += rank1_->coefficient * u * u.transpose();
  }
  m.diagonal().array() += diag_shift_;
  return m;
}

bool MatrixOperator::all_finite() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!std::isfinite(diag_shift_)) return false;
  if (!std::all_of(vals_.begin(), vals_.end(), finite)) return false;
  if (rank1_) {
    if (!std::isfinite(rank1_->coefficient)) return false;
    if (!std::all_of(rank1_->u.begin(), rank1_->u.end(), finite)) return false;
  }
  return true;
}

}  // namespace ssbm
