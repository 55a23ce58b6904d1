// Copyright 2026 The p12tsp Authors
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

// std::mt19937_64 is fully specified by the standard; the distributions are
// not, so the few we need are spelled out here to keep outputs identical
// across standard libraries.

#ifndef P12TSP_SRC_RNG_HPP_
#define P12TSP_SRC_RNG_HPP_

#include <cstdint>
#include <random>

namespace p12tsp::rng {

using Engine = std::mt19937_64;

// Uniform integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
  // 2^64 mod bound; rejecting that many values leaves a multiple of bound.
  const std::uint64_t reject_below = (0 - bound) % bound;
  std::uint64_t x = engine();
  while (x < reject_below) x = engine();
  return x % bound;
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace p12tsp::rng

#endif  // P12TSP_SRC_RNG_HPP_
