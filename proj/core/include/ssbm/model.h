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

#ifndef SSBM_MODEL_H_
#define SSBM_MODEL_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ssbm {

class MatrixOperator;

using Vertex = std::uint32_t;

// One semi-supervised planted bisection instance: n vertices split evenly,
// within-community edge probability a/n, cross-community b/n, and a balanced
// reveal of m = 2*floor(rho*n/2) labels.
struct ModelParams {
  std::uint32_t n = 0;
  double a = 0.0;
  double b = 0.0;
  double rho = 0.0;
  std::uint64_t seed = 0;

  // Average degree (a+b)/2.
  double d() const { return 0.5 * (a + b); }
  // Number of revealed vertices, always even.
  std::uint32_t m() const;

  // Throws InvalidArgument when the parameters describe no valid model.
  void validate() const;
};

// (a-b)^2 / (2(a+b)). Weak recovery without side information is possible
// exactly when this exceeds one.
double snr(double a, double b);

// Balanced +1/-1 labelling of the vertices.
class Labels {
 public:
  Labels() = default;
  // Throws unless every entry is +1/-1 and the entries sum to zero.
  explicit Labels(std::vector<std::int8_t> values);

  std::span<const std::int8_t> values() const { return values_; }
  std::int8_t operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const Labels&, const Labels&) = default;

 private:
  std::vector<std::int8_t> values_;
};

// Simple undirected graph with sorted adjacency lists, plus its ground-truth
// labels (which may be empty for unlabeled graphs).
class Graph {
 public:
  Graph() = default;
  // Builds from an edge list. Throws on self-loops, duplicate edges or out
  // of range endpoints. Orientation of each pair does not matter.
  Graph(std::uint32_t n, std::span<const std::pair<Vertex, Vertex>> edges,
        Labels labels);

  std::uint32_t num_vertices() const { return n_; }
  std::uint64_t num_edges() const { return num_edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;
  const Labels& labels() const { return labels_; }

  // Edges with i < j in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint32_t n_ = 0;
  std::uint64_t num_edges_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  Labels labels_;
};

// Ternary vector with the revealed index set.
class RevealedLabels {
 public:
  RevealedLabels() = default;
  // Throws unless entries are in {-1,0,+1}.
  explicit RevealedLabels(std::vector<std::int8_t> values);

  std::span<const std::int8_t> values() const { return values_; }
  std::int8_t operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  std::span<const Vertex> revealed() const { return revealed_; }
  std::size_t num_revealed() const { return revealed_.size(); }
  bool is_revealed(Vertex v) const { return values_[v] != 0; }
  // Sum of the revealed labels; zero for a balanced reveal.
  int balance() const;
  // Indices with value 0, ascending.
  std::vector<Vertex> unrevealed() const;
  // Same reveal set with every revealed label negated.
  RevealedLabels flipped() const;

  friend bool operator==(const RevealedLabels&,
                         const RevealedLabels&) = default;

 private:
  std::vector<std::int8_t> values_;
  std::vector<Vertex> revealed_;
};

struct Instance {
  Graph graph;
  RevealedLabels revealed;
};

// Draws (G, x~) from the semi-supervised planted bisection model. Fully
// determined by params.seed.
Instance sample_instance(const ModelParams& params);

// Erdos-Renyi graph G(n, p) with no labels.
Graph sample_erdos_renyi(std::uint32_t n, double p, std::uint64_t seed);

// A - (d/n) 1 1^T as sparse part plus rank-one correction.
MatrixOperator centered_adjacency(const Graph& g, double d);

}  // namespace ssbm

#endif  // SSBM_MODEL_H_
