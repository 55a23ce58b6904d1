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

#include "p12tsp/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace p12tsp {

std::string_view to_string(ExactMethod method) {
  return method == ExactMethod::kHeldKarp ? "held-karp" : "brute-force";
}

ExactResult held_karp(const Instance& instance, int limit) {
  const int n = instance.size();
  if (n > limit) {
    throw SizeExceededError("held-karp limit is n <= " + std::to_string(limit) + ", got n=" +
                            std::to_string(n) + "; supply a reference tour instead");
  }
  // dp[mask][j]: cheapest path 0 -> ... -> j over vertices {0} + mask, where
  // mask ranges over subsets of {1..n-1} (bit j-1 for vertex j).
  const int m = n - 1;
  const std::size_t subsets = std::size_t{1} << m;
  constexpr std::uint16_t kInf = std::numeric_limits<std::uint16_t>::max();
  std::vector<std::uint16_t> dp(subsets * static_cast<std::size_t>(m), kInf);
  auto cell = [&](std::size_t mask, int j) -> std::uint16_t& {
    return dp[mask * static_cast<std::size_t>(m) + static_cast<std::size_t>(j - 1)];
  };
  auto cost = [&](Vertex a, Vertex b) { return instance.cost_unchecked(a, b); };

  for (int j = 1; j < n; ++j) cell(std::size_t{1} << (j - 1), j) = static_cast<std::uint16_t>(cost(0, j));
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    for (int j = 1; j < n; ++j) {
      const std::size_t bit = std::size_t{1} << (j - 1);
      if (!(mask & bit)) continue;
      const std::uint16_t here = cell(mask, j);
      if (here == kInf) continue;
      for (int next = 1; next < n; ++next) {
        const std::size_t nbit = std::size_t{1} << (next - 1);
        if (mask & nbit) continue;
        const auto candidate = static_cast<std::uint16_t>(here + cost(j, next));
        std::uint16_t& slot = cell(mask | nbit, next);
        if (candidate < slot) slot = candidate;
      }
    }
  }

  const std::size_t full = subsets - 1;
  int best = std::numeric_limits<int>::max();
  int last = 1;
  for (int j = 1; j < n; ++j) {
    const int total = cell(full, j) + cost(j, 0);
    if (total < best) {
      best = total;
      last = j;
    }
  }

  // Walk back choosing the least predecessor consistent with the optimum.
  std::vector<Vertex> reversed{last};
  std::size_t mask = full;
  int current = last;
  while (true) {
    const std::size_t without = mask & ~(std::size_t{1} << (current - 1));
    if (without == 0) break;
    int pred = -1;
    for (int i = 1; i < n; ++i) {
      if (!(without & (std::size_t{1} << (i - 1)))) continue;
      if (cell(without, i) != kInf && cell(without, i) + cost(i, current) == cell(mask, current)) {
        pred = i;
        break;
      }
    }
    reversed.push_back(pred);
    mask = without;
    current = pred;
  }
  std::vector<Vertex> order{0};
  order.insert(order.end(), reversed.rbegin(), reversed.rend());
  Tour tour(std::move(order));
  return ExactResult{std::move(tour), best, ExactMethod::kHeldKarp};
}

ExactResult brute_force(const Instance& instance) {
  const int n = instance.size();
  if (n > kBruteForceLimit) {
    throw SizeExceededError("brute force limit is n <= " + std::to_string(kBruteForceLimit) +
                            ", got n=" + std::to_string(n));
  }
  std::vector<Vertex> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  int best = std::numeric_limits<int>::max();
  std::vector<Vertex> best_rest;
  do {
    // Each cycle appears twice; keep the orientation with rest.front() < rest.back().
    if (rest.front() > rest.back()) continue;
    int total = instance.cost_unchecked(0, rest.front()) + instance.cost_unchecked(rest.back(), 0);
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) total += instance.cost_unchecked(rest[i], rest[i + 1]);
    if (total < best) {
      best = total;
      best_rest = rest;
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::vector<Vertex> order{0};
  order.insert(order.end(), best_rest.begin(), best_rest.end());
  return ExactResult{Tour(std::move(order)), best, ExactMethod::kBruteForce};
}

}  // namespace p12tsp
