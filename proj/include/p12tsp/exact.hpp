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

#ifndef P12TSP_EXACT_HPP_
#define P12TSP_EXACT_HPP_

#include <stdexcept>
#include <string_view>

#include "p12tsp/core.hpp"

namespace p12tsp {

enum class ExactMethod { kHeldKarp, kBruteForce };

std::string_view to_string(ExactMethod method);

struct ExactResult {
  Tour tour;
  int cost = 0;
  ExactMethod method = ExactMethod::kHeldKarp;
};

class SizeExceededError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kDefaultHeldKarpLimit = 16;
inline constexpr int kBruteForceLimit = 10;

// Subset DP over (visited set, endpoint) with vertex 0 fixed as the start.
// Ties are broken towards the least endpoint and the least predecessor, so
// the returned optimum is a deterministic function of the instance.
// Throws SizeExceededError when n > limit.
ExactResult held_karp(const Instance& instance, int limit = kDefaultHeldKarpLimit);

// Minimum over all (n-1)!/2 tours; the first optimum in lexicographic order
// of the tour starting at vertex 0. Throws SizeExceededError when n > 10.
ExactResult brute_force(const Instance& instance);

}  // namespace p12tsp

#endif  // P12TSP_EXACT_HPP_
