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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ssbm/errors.h"
#include "ssbm/matrix_operator.h"
#include "ssbm/rng.h"

namespace ssbm {
namespace {

// Number of failures before the next success of a Bernoulli(p) sequence.
class SkipSampler {
 public:
  SkipSampler(double p, SplitMix64& rng) : p_(p), rng_(rng) {
    if (p > 0.0 && p < 1.0) log_q_ = std::log1p(-p);
  }

  bool never() const { return p_ <= 0.0; }

  std::uint64_t next() {
    if (p_ >= 1.0) return 0;
    // 1 - U lies in (0, 1], so the logarithm is finite.
    const double u = 1.0 - rng_.uniform();
    const double skip = std::floor(std::log(u) / log_q_);
    if (skip >= 9.0e18) return std::numeric_limits<std::uint64_t>::max() / 4;
    return static_cast<std::uint64_t>(skip);
  }

 private:
  double p_;
  double log_q_ = 0.0;
  SplitMix64& rng_;
};

// Every unordered pair inside `members` independently with probability p.
void sample_within(std::span<const Vertex> members, double p, SplitMix64& rng,
                   std::vector<std::pair<Vertex, Vertex>>& out) {
  SkipSampler skip(p, rng);
  if (skip.never()) return;
  const std::uint64_t h = members.size();
  // Walk the strict lower triangle row by row (row v has v entries).
  std::uint64_t v = 1;
  std::uint64_t w = 0;
  bool first = true;
  while (v < h) {
    std::uint64_t step = skip.next();
    if (first) {
      w = step;
      first = false;
    } else {
      w += 1 + step;
    }
    while (v < h && w >= v) {
      w -= v;
      ++v;
    }
    if (v < h) out.emplace_back(members[v], members[w]);
  }
}

// Every pair in left x right independently with probability p.
void sample_across(std::span<const Vertex> left, std::span<const Vertex> right,
                   double p, SplitMix64& rng,
                   std::vector<std::pair<Vertex, Vertex>>& out) {
  SkipSampler skip(p, rng);
  if (skip.never() || left.empty() || right.empty()) return;
  const std::uint64_t cols = right.size();
  const std::uint64_t total = left.size() * cols;
  std::uint64_t pos = skip.next();
  while (pos < total) {
    out.emplace_back(left[pos / cols], right[pos % cols]);
    const std::uint64_t step = skip.next();
    if (step >= total) break;
    pos += 1 + step;
  }
}

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument(std::string("invalid edge probability for ") + what +
                          ": " + std::to_string(p));
  }
}

}  // namespace

std::uint32_t ModelParams::m() const {
  const double half = std::floor(rho * static_cast<double>(n) / 2.0);
  return 2 * static_cast<std::uint32_t>(std::max(0.0, half));
}

void ModelParams::validate() const {
  if (n == 0 || n % 2 != 0) {
    throw InvalidArgument("n must be a positive even integer, got " +
                          std::to_string(n));
  }
  if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw InvalidArgument("rates a and b must be finite and non-negative");
  }
  if (b > a) throw InvalidArgument("requires b <= a");
  check_probability(a / n, "a/n");
  check_probability(b / n, "b/n");
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw InvalidArgument("reveal ratio rho must lie in [0, 1]");
  }
}

double snr(double a, double b) {
  if (!(a + b > 0.0)) {
    throw InvalidArgument("snr is undefined when a + b = 0");
  }
  const double diff = a - b;
  return diff * diff / (2.0 * (a + b));
}

Labels::Labels(std::vector<std::int8_t> values) : values_(std::move(values)) {
  long sum = 0;
  for (std::int8_t v : values_) {
    if (v != 1 && v != -1) throw InvalidArgument("labels must be +1 or -1");
    sum += v;
  }
  if (sum != 0) throw InvalidArgument("labels must form a balanced bisection");
}

Graph::Graph(std::uint32_t n, std::span<const std::pair<Vertex, Vertex>> edges,
             Labels labels)
    : n_(n), adjacency_(n), labels_(std::move(labels)) {
  if (labels_.size() != 0 && labels_.size() != n) {
    throw InvalidArgument("label vector length does not match vertex count");
  }
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("self-loops are not allowed");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidArgument("duplicate edge");
    }
  }
  num_edges_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

RevealedLabels::RevealedLabels(std::vector<std::int8_t> values)
    : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const std::int8_t v = values_[i];
    if (v < -1 || v > 1) {
      throw InvalidArgument("revealed labels must be in {-1, 0, +1}");
    }
    if (v != 0) revealed_.push_back(static_cast<Vertex>(i));
  }
}

int RevealedLabels::balance() const {
  int sum = 0;
  for (Vertex v : revealed_) sum += values_[v];
  return sum;
}

std::vector<Vertex> RevealedLabels::unrevealed() const {
  std::vector<Vertex> out;
  out.reserve(values_.size() - revealed_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == 0) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

RevealedLabels RevealedLabels::flipped() const {
  std::vector<std::int8_t> values(values_.size());
  std::transform(values_.begin(), values_.end(), values.begin(),
                 [](std::int8_t v) { return static_cast<std::int8_t>(-v); });
  return RevealedLabels(std::move(values));
}

Instance sample_instance(const ModelParams& params) {
  params.validate();
  const std::uint32_t n = params.n;
  const std::uint32_t half = n / 2;

  // Uniform balanced bisection: Fisher-Yates, first half is community +1.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  SplitMix64 partition_rng =
      make_stream(params.seed, StreamPurpose::kPartition);
  for (std::uint32_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::uint32_t>(partition_rng.below(i + 1));
    std::swap(order[i], order[j]);
  }
  std::vector<Vertex> first(order.begin(), order.begin() + half);
  std::vector<Vertex> second(order.begin() + half, order.end());
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());

  std::vector<std::int8_t> label_values(n, -1);
  for (Vertex v : first) label_values[v] = 1;

  const double p_in = params.a / n;
  const double p_out = params.b / n;
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(
      1.2 * (params.d() * n / 2.0) + 16.0));
  SplitMix64 edge_rng = make_stream(params.seed, StreamPurpose::kEdges);
  sample_within(first, p_in, edge_rng, edges);
  sample_within(second, p_in, edge_rng, edges);
  sample_across(first, second, p_out, edge_rng, edges);

  // Balanced reveal: m/2 uniformly chosen members of each community.
  const std::uint32_t m = params.m();
  std::vector<std::int8_t> revealed(n, 0);
  SplitMix64 reveal_rng = make_stream(params.seed, StreamPurpose::kReveal);
  for (auto* community : {&first, &second}) {
    std::vector<Vertex> pool = *community;
    for (std::uint32_t k = 0; k < m / 2; ++k) {
      const auto j = k + static_cast<std::uint32_t>(
                             reveal_rng.below(pool.size() - k));
      std::swap(pool[k], pool[j]);
      revealed[pool[k]] = label_values[pool[k]];
    }
  }

  return Instance{Graph(n, edges, Labels(std::move(label_values))),
                  RevealedLabels(std::move(revealed))};
}

Graph sample_erdos_renyi(std::uint32_t n, double p, std::uint64_t seed) {
  check_probability(p, "p");
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  std::vector<std::pair<Vertex, Vertex>> edges;
  SplitMix64 rng = make_stream(seed, StreamPurpose::kEdges);
  sample_within(all, p, rng, edges);
  return Graph(n, edges, Labels());
}

MatrixOperator centered_adjacency(const Graph& g, double d) {
  if (!(d >= 0.0)) throw InvalidArgument("average degree must be >= 0");
  const std::uint32_t n = g.num_vertices();
  std::vector<Triplet> entries;
  entries.reserve(g.num_edges());
  for (const auto& [u, v] : g.edge_list()) entries.push_back({u, v, 1.0});
  std::optional<RankOne> rank1;
  if (d > 0.0 && n > 0) {
    rank1 = RankOne{std::vector<double>(n, 1.0), -d / n};
  }
  return MatrixOperator(n, entries, std::move(rank1));
}

}  // namespace ssbm
