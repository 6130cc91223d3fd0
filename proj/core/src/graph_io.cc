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

#include "ssbm/graph_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ssbm/errors.h"

namespace ssbm {
namespace {

void write_signed(std::ostream& out, std::int8_t v) {
  if (v > 0) {
    out << "+1";
  } else if (v < 0) {
    out << "-1";
  } else {
    out << '0';
  }
}

std::vector<std::int8_t> parse_ternary(std::istringstream& line,
                                       std::uint32_t n, char tag) {
  std::vector<std::int8_t> values;
  values.reserve(n);
  long v;
  while (line >> v) {
    if (v < -1 || v > 1) {
      throw IoError(std::string("entry out of range on ") + tag + " line");
    }
    values.push_back(static_cast<std::int8_t>(v));
  }
  if (!line.eof() || values.size() != n) {
    throw IoError(std::string("malformed ") + tag + " line");
  }
  return values;
}

}  // namespace

void write_instance(std::ostream& out, const Graph& g,
                    const RevealedLabels& revealed) {
  const std::uint32_t n = g.num_vertices();
  out << n << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
  if (g.labels().size() == n) {
    out << 'L';
    for (std::int8_t v : g.labels().values()) {
      out << ' ';
      write_signed(out, v);
    }
    out << '\n';
  }
  if (revealed.size() == n) {
    out << 'R';
    for (std::int8_t v : revealed.values()) {
      out << ' ';
      write_signed(out, v);
    }
    out << '\n';
  }
}

Instance read_instance(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("missing header line");
  std::uint32_t n = 0;
  std::uint64_t m_edges = 0;
  {
    std::istringstream header(line);
    if (!(header >> n >> m_edges)) throw IoError("malformed header line");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m_edges);
  for (std::uint64_t k = 0; k < m_edges; ++k) {
    if (!std::getline(in, line)) throw IoError("truncated edge list");
    std::istringstream row(line);
    long long i, j;
    if (!(row >> i >> j) || i < 0 || j < 0 || i >= j || j >= n) {
      throw IoError("malformed edge line: '" + line + "'");
    }
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  std::vector<std::int8_t> labels;
  std::vector<std::int8_t> revealed;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    char tag;
    row >> tag;
    if (tag == 'L') {
      labels = parse_ternary(row, n, 'L');
    } else if (tag == 'R') {
      revealed = parse_ternary(row, n, 'R');
    } else {
      throw IoError("unexpected line: '" + line + "'");
    }
  }
  if (revealed.empty()) revealed.assign(n, 0);
  try {
    Graph g(n, edges, Labels(std::move(labels)));
    RevealedLabels rev(std::move(revealed));
    if (g.labels().size() == n) {
      for (Vertex v : rev.revealed()) {
        if (rev[v] != g.labels()[v]) {
          throw IoError("revealed label disagrees with ground truth");
        }
      }
    }
    return Instance{std::move(g), std::move(rev)};
  } catch (const InvalidArgument& e) {
    throw IoError(e.what());
  }
}

void save_instance(const std::string& path, const Graph& g,
                   const RevealedLabels& revealed) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_instance(out, g, revealed);
  if (!out) throw IoError("write to '" + path + "' failed");
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_instance(in);
}

}  // namespace ssbm
