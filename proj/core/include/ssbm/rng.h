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

#ifndef SSBM_RNG_H_
#define SSBM_RNG_H_

#include <cstdint>
#include <limits>

namespace ssbm {

// SplitMix64 finalizer. Bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

// What a random stream is used for. Each purpose gets its own stream so that
// e.g. drawing more edges never shifts the reveal set.
enum class StreamPurpose : std::uint64_t {
  kPartition = 1,
  kEdges = 2,
  kReveal = 3,
  kCensusTie = 4,
  kSolverInit = 5,
  kRounding = 6,
  kTask = 7,
  kOracle = 8,
};

// SplitMix64 generator. Satisfies UniformRandomBitGenerator, but the
// distribution helpers below are implemented here so that results are
// bit-identical across standard libraries.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound). Lemire's nearly divisionless method.
  std::uint64_t below(std::uint64_t bound);

  bool coin() { return ((*this)() >> 63) != 0; }

  // Standard normal via the Marsaglia polar method (no cached spare).
  double normal();

 private:
  std::uint64_t state_;
};

// Independent stream for a (seed, purpose, index) triple.
SplitMix64 make_stream(std::uint64_t seed, StreamPurpose purpose,
                       std::uint64_t index = 0);

// Derives a child seed; used to give each replication its own instance seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                          std::uint64_t b = 0, std::uint64_t c = 0);

}  // namespace ssbm

#endif  // SSBM_RNG_H_
