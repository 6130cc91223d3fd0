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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>
#include <type_traits>

#include "ssbm/errors.h"
#include "ssbm/experiment.h"

namespace ssbm {
namespace {

constexpr const char* kColumns[] = {
    "seed",       "rep",       "n",          "a",
    "b",          "rho",       "snr",        "algorithm",
    "overlap_unrevealed",      "sdp_value",  "csdp_value",
    "margin00",   "test_decision",           "truth_model",
    "runtime_ms"};

std::string shortest(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, end);
}

template <typename T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return std::isfinite(*v) ? shortest(*v) : "";
  } else {
    return std::to_string(*v);
  }
}

double parse_double(const std::string& s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw IoError("bad number in records: '" + s + "'");
  }
  return v;
}

template <typename T>
T parse_integer(const std::string& s) {
  T v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw IoError("bad integer in records: '" + s + "'");
  }
  return v;
}

std::optional<double> optional_double(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_double(s);
}

Algorithm parse_algorithm(const std::string& s) {
  if (s == "census-t") return Algorithm::kCensus;
  if (s == "sdp") return Algorithm::kSdp;
  if (s == "csdp") return Algorithm::kCsdp;
  throw IoError("unknown algorithm '" + s + "'");
}

TruthModel parse_truth(const std::string& s) {
  if (s == "sbm") return TruthModel::kSbm;
  if (s == "erm") return TruthModel::kErm;
  throw IoError("unknown truth model '" + s + "'");
}

double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - lo) * (sorted[hi] - sorted[lo]);
}

std::optional<Stats> describe_if_any(const std::vector<double>& values) {
  if (values.empty()) return std::nullopt;
  return describe(values);
}

}  // namespace

std::span<const char* const> result_record_columns() { return kColumns; }

void write_records_csv(std::ostream& out, std::span<const ResultRecord> rows) {
  for (std::size_t k = 0; k < std::size(kColumns); ++k) {
    out << (k ? "," : "") << kColumns[k];
  }
  out << '\n';
  for (const ResultRecord& r : rows) {
    out << r.seed << ',' << r.rep << ',' << r.n << ',' << shortest(r.a) << ','
        << shortest(r.b) << ',' << shortest(r.rho) << ',' << shortest(r.snr)
        << ',' << to_string(r.algorithm) << ',' << cell(r.overlap_unrevealed)
        << ',' << cell(r.sdp_value) << ',' << cell(r.csdp_value) << ','
        << cell(r.margin00) << ',' << cell(r.test_decision) << ','
        << to_string(r.truth_model) << ',' << cell(r.runtime_ms) << '\n';
  }
}

std::vector<ResultRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("records: missing header");
  std::vector<ResultRecord> rows;
  std::map<std::tuple<std::uint32_t, double, double, double>, std::uint32_t>
      cells;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(item);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != std::size(kColumns)) {
      throw IoError("records: expected " + std::to_string(std::size(kColumns)) +
                    " fields, got " + std::to_string(f.size()));
    }
    ResultRecord r;
    r.seed = parse_integer<std::uint64_t>(f[0]);
    r.rep = parse_integer<std::uint32_t>(f[1]);
    r.n = parse_integer<std::uint32_t>(f[2]);
    r.a = parse_double(f[3]);
    r.b = parse_double(f[4]);
    r.rho = parse_double(f[5]);
    r.snr = parse_double(f[6]);
    r.algorithm = parse_algorithm(f[7]);
    r.overlap_unrevealed = optional_double(f[8]);
    r.sdp_value = optional_double(f[9]);
    r.csdp_value = optional_double(f[10]);
    r.margin00 = optional_double(f[11]);
    if (!f[12].empty()) r.test_decision = parse_integer<int>(f[12]);
    r.truth_model = parse_truth(f[13]);
    r.runtime_ms = optional_double(f[14]);
    auto key = std::make_tuple(r.n, r.a, r.b, r.rho);
    auto it = cells.try_emplace(key, static_cast<std::uint32_t>(cells.size()));
    r.cell = it.first->second;
    rows.push_back(std::move(r));
  }
  return rows;
}

Stats describe(std::span<const double> values) {
  if (values.empty()) throw InvalidArgument("describe: no values");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  Stats s;
  s.count = sorted.size();
  double sum = 0.0;
  for (double v : sorted) sum += v;
  s.mean = sum / s.count;
  if (s.count > 1) {
    double ss = 0.0;
    for (double v : sorted) ss += (v - s.mean) * (v - s.mean);
    s.stderr_mean = std::sqrt(ss / (s.count - 1) / s.count);
  }
  s.min = sorted.front();
  s.q1 = quantile(sorted, 0.25);
  s.median = quantile(sorted, 0.5);
  s.q3 = quantile(sorted, 0.75);
  s.max = sorted.back();
  return s;
}

double best_threshold_accuracy(std::span<const double> planted,
                               std::span<const double> null) {
  const std::size_t total = planted.size() + null.size();
  if (total == 0) throw InvalidArgument("best_threshold_accuracy: no values");
  std::vector<double> p(planted.begin(), planted.end());
  std::vector<double> q(null.begin(), null.end());
  std::sort(p.begin(), p.end());
  std::sort(q.begin(), q.end());
  // Threshold above everything: all predicted null.
  std::size_t best = q.size();
  for (double thr : p) {
    const std::size_t tp =
        p.end() - std::lower_bound(p.begin(), p.end(), thr);
    const std::size_t tn = std::lower_bound(q.begin(), q.end(), thr) - q.begin();
    best = std::max(best, tp + tn);
  }
  return static_cast<double>(best) / total;
}

double separation_score(std::span<const double> planted,
                        std::span<const double> null) {
  if (planted.empty() || null.empty()) {
    throw InvalidArgument("separation_score: empty set");
  }
  return *std::min_element(planted.begin(), planted.end()) -
         *std::max_element(null.begin(), null.end());
}

std::vector<GroupSummary> summarize(std::span<const ResultRecord> records) {
  if (records.empty()) throw InvalidArgument("summarize: no records");
  struct Acc {
    GroupSummary g;
    std::vector<double> overlap, sdp, csdp, margin;
  };
  std::vector<Acc> groups;
  std::map<std::tuple<std::uint32_t, int, int>, std::size_t> index;
  for (const ResultRecord& r : records) {
    auto key = std::make_tuple(r.cell, static_cast<int>(r.algorithm),
                               static_cast<int>(r.truth_model));
    auto [it, fresh] = index.try_emplace(key, groups.size());
    if (fresh) {
      Acc acc;
      acc.g.cell = r.cell;
      acc.g.n = r.n;
      acc.g.a = r.a;
      acc.g.b = r.b;
      acc.g.rho = r.rho;
      acc.g.algorithm = r.algorithm;
      acc.g.truth_model = r.truth_model;
      groups.push_back(std::move(acc));
    }
    Acc& acc = groups[it->second];
    ++acc.g.records;
    if (!r.error.empty() || !r.converged) ++acc.g.failures;
    auto push = [](std::vector<double>& to, const std::optional<double>& v) {
      if (v && std::isfinite(*v)) to.push_back(*v);
    };
    push(acc.overlap, r.overlap_unrevealed);
    push(acc.sdp, r.sdp_value);
    push(acc.csdp, r.csdp_value);
    push(acc.margin, r.margin00);
  }
  std::vector<GroupSummary> out;
  out.reserve(groups.size());
  for (Acc& acc : groups) {
    acc.g.overlap = describe_if_any(acc.overlap);
    acc.g.sdp_value = describe_if_any(acc.sdp);
    acc.g.csdp_value = describe_if_any(acc.csdp);
    acc.g.margin00 = describe_if_any(acc.margin);
    out.push_back(std::move(acc.g));
  }
  return out;
}

std::vector<DetectionPanel> detection_panels(
    std::span<const ResultRecord> records) {
  std::map<std::pair<std::uint32_t, int>,
           std::pair<std::vector<double>, std::vector<double>>>
      sets;
  std::vector<std::pair<std::uint32_t, int>> order;
  for (const ResultRecord& r : records) {
    if (r.algorithm == Algorithm::kCensus) continue;
    const auto& value =
        r.algorithm == Algorithm::kSdp ? r.sdp_value : r.csdp_value;
    if (!value || !std::isfinite(*value)) continue;
    auto key = std::make_pair(r.cell, static_cast<int>(r.algorithm));
    auto [it, fresh] = sets.try_emplace(key);
    if (fresh) order.push_back(key);
    (r.truth_model == TruthModel::kSbm ? it->second.first : it->second.second)
        .push_back(*value);
  }
  std::vector<DetectionPanel> panels;
  for (const auto& key : order) {
    const auto& [planted, null] = sets[key];
    if (planted.empty() || null.empty()) continue;
    DetectionPanel p;
    p.cell = key.first;
    p.algorithm = static_cast<Algorithm>(key.second);
    p.planted = planted.size();
    p.null = null.size();
    p.separation = separation_score(planted, null);
    p.best_accuracy = best_threshold_accuracy(planted, null);
    panels.push_back(p);
  }
  return panels;
}

}  // namespace ssbm
