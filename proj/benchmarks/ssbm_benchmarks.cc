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

#include <benchmark/benchmark.h>

#include "ssbm/census.h"
#include "ssbm/csdp.h"
#include "ssbm/model.h"
#include "ssbm/sdp.h"

namespace ssbm {
namespace {

void BM_SampleInstance(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_instance({n, 5, 2, 0.1, seed++}));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SampleInstance)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_Census(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto depth = static_cast<std::uint32_t>(state.range(1));
  const Instance inst = sample_instance({n, 5, 2, 0.1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(census_estimate(inst.graph, inst.revealed, depth, 1));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Census)->Args({3000, 1})->Args({3000, 2})->Args({100000, 1});

void BM_MixingSweep(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Instance inst = sample_instance({n, 9, 2, 0, 2});
  const MatrixOperator m = centered_adjacency(inst.graph, 5.5);
  SolverConfig cfg;
  cfg.max_sweeps = 1;
  cfg.restarts = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_elliptope(m, cfg).value);
  }
}
BENCHMARK(BM_MixingSweep)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_Aggregate(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Instance inst = sample_instance({n, 9, 2, 0.2, 3});
  const MatrixOperator m = centered_adjacency(inst.graph, 5.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(aggregate(m, inst.revealed).margin00);
  }
}
BENCHMARK(BM_Aggregate)->Arg(1000)->Arg(100000);

void BM_SolveCsdp(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const Instance inst = sample_instance({n, 9, 2, 0.2, 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_csdp(inst.graph, inst.revealed, 5.5, SolverConfig{}).value);
  }
}
BENCHMARK(BM_SolveCsdp)->Arg(400)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ssbm
