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

// Counter distribution against a fixed optimal tour, the structural checks
// a 3-optimal tour must pass, and the exact ratio arithmetic.

#ifndef P12TSP_ANALYSIS_HPP_
#define P12TSP_ANALYSIS_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "p12tsp/core.hpp"

namespace p12tsp {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);  // "p/q"

enum class CounterKind { kGood, kBad };

std::string_view to_string(CounterKind kind);

// One counter placed on `at` by the path endpoint `source` through the
// cost-1 optimal-tour edge `via_edge` = {source, at}.
struct Counter {
  CounterKind kind = CounterKind::kBad;
  Vertex at = 0;
  int source_path = 0;  // index into CounterLedger::decomposition.paths
  Vertex source = 0;
  Edge via_edge{};

  friend bool operator==(const Counter&, const Counter&) = default;
};

struct CounterLedger {
  std::vector<Counter> counters;
  int h = 0;  // cost-1 edges of T
  int l = 0;  // cost-2 edges of T
  int f = 0;  // cost-2 edges of the optimal tour
  Tour optimal;
  PathDecomposition decomposition;

  int good() const;
  int bad() const;
  int total() const { return static_cast<int>(counters.size()); }
};

// Length-0 path {v}: two good counters on each optimal-tour neighbour w of v
// with c(v,w) = 1. Path with edges: one bad counter on each such w of each
// endpoint. Throws ValidationError if either tour does not fit the instance.
CounterLedger distribute_counters(const Instance& instance, const Tour& tour,
                                  const Tour& optimal);

struct PropertyResult {
  bool pass = true;
  std::string witness;  // empty when pass
};

struct CounterPropertyReport {
  std::array<PropertyResult, 5> properties;  // index p holds property p+1

  bool all_pass() const;
};

// Evaluates the five structural properties:
//  1. counters at a vertex, grouped by via_edge, form at most two groups,
//     each two good counters or one bad counter;
//  2. good-counter vertices are never tour-adjacent, and the vertex between
//     two good-counter vertices at tour distance 2 carries no counter;
//  3. length-0 path vertices carry no counters, other endpoints at most one
//     bad and no good counter;
//  4. no cost-1 tour neighbour of a counter-bearing endpoint has a good
//     counter;
//  5. bad counters <= 4 * (paths with at least one edge).
CounterPropertyReport check_counter_properties(const Instance& instance, const Tour& tour,
                                               const CounterLedger& ledger);

// 5 * total <= 12 * h.
bool count_bound_check(const CounterLedger& ledger);

// Every counter rides a cost-1 optimal-tour edge from a path endpoint, good
// counters come in pairs from length-0 paths, bad ones from longer paths,
// and no (source_path, via_edge, at) key repeats beyond its pair. Returns the
// first problem, or an empty string.
std::string ledger_defect(const Instance& instance, const CounterLedger& ledger);

struct GbPair {
  int i = 0;
  int g = 0;
  int b = 0;
};

// Good and bad counter capacities of a path with i edges. Throws
// std::invalid_argument for i < 0.
GbPair gb_values(int i);

struct DualCheck {
  bool feasible = false;
  // Scaled slack 36i - 12b_i - 12 - 15g_i, minimum over each residue i mod 3.
  std::array<std::int64_t, 3> min_slack{};
  std::array<std::int64_t, 3> max_slack{};
  int first_violation = 0;  // 0 when feasible
};

// Checks the dual point (12/5, 4/5, 1/5) against every constraint with
// 1 <= i <= max_i, in integers scaled by 15.
DualCheck dual_feasibility_check(int max_i);

// 1 + d / (4 + d). Throws std::invalid_argument for d < 0.
Rational ratio_upper_bound(const Rational& d);

struct PpPathReport {
  bool pass = true;
  std::string witness;
};

// Paths holding a good counter have exactly two edges; a path with x edges
// holds at most 2x counters.
PpPathReport pp_path_checks(const Instance& instance, const Tour& tour,
                            const CounterLedger& ledger);

struct RatioReport {
  int h = 0;
  int l = 0;
  int f = 0;  // cost-2 edges of the reference
  int cost_tour = 0;
  int cost_reference = 0;
  Rational ratio{1};
  Rational bound_three_opt{1};  // ratio_upper_bound(12/5)
  Rational bound_plus_plus{1};  // ratio_upper_bound(2)
};

RatioReport ratio_report(const Instance& instance, const Tour& tour, const Tour& reference);

}  // namespace p12tsp

#endif  // P12TSP_ANALYSIS_HPP_
