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

#include "ssbm/rng.h"

#include <cmath>

namespace ssbm {

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

__extension__ typedef unsigned __int128 Uint128;

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) return 0;
  Uint128 product =
      static_cast<Uint128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<Uint128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

double SplitMix64::normal() {
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  return u * std::sqrt(-2.0 * std::log(s) / s);
}

SplitMix64 make_stream(std::uint64_t seed, StreamPurpose purpose,
                       std::uint64_t index) {
  return SplitMix64(
      derive_seed(seed, static_cast<std::uint64_t>(purpose), index));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a,
                          std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = mix64(seed ^ 0x6a09e667f3bcc908ULL);
  h = mix64(h ^ (a * 0x9e3779b97f4a7c15ULL + 0x3c6ef372fe94f82bULL));
  h = mix64(h ^ (b * 0xc2b2ae3d27d4eb4fULL + 0xa54ff53a5f1d36f1ULL));
  h = mix64(h ^ (c * 0x165667b19e3779f9ULL + 0x510e527fade682d1ULL));
  return h;
}

}  // namespace ssbm
