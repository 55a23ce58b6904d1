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

// Lower-bound instance families with their locally optimal tours, the
// segment-regularity checker, and a Bernoulli random instance model.

#ifndef P12TSP_CONSTRUCTIONS_HPP_
#define P12TSP_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "p12tsp/core.hpp"

namespace p12tsp {

struct FamilyOutput {
  Instance instance;
  Tour tour;            // the locally optimal construction
  Tour reference_tour;  // optimal, or within claimed_reference_bound
  int claimed_tour_cost = 0;
  int claimed_reference_bound = 0;
};

enum class Family { kTwoOptLb, kThreeOptLb, kThreeOptPpLb };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

// Vertices per segment of a family's natural labeling.
int base_segment_length(Family family);

// n >= 7. Cost-1 edges: consecutive pairs, the closing pair, and the chords
// {v_i, v_i+2} with i odd (1-based). The tour visits the odd-labeled
// vertices ascending and the even-labeled ones descending.
FamilyOutput gen_two_opt_lb(int n);

// s >= 3; 8s vertices. The tour is the identity cycle of cost 11s.
FamilyOutput gen_three_opt_lb(int s);

// Reference tour for gen_three_opt_lb(s) with cost at most 8s + 4.
Tour build_three_opt_reference(int s);

// s >= 2; 6s vertices. The tour is the identity cycle of cost 8s; the
// reference tour uses only cost-1 edges.
FamilyOutput gen_three_opt_pp_lb(int s);

struct RegularityReport {
  bool regular = false;
  // First violating pair {i, j}: either cost(i,j) != cost(i+l, j+l), or a
  // cost-1 edge whose endpoints are more than one segment apart.
  std::optional<Edge> violation;
  int violated_condition = 0;  // 2 or 3 when a violation is reported
};

// Checks shift-invariance by `segment_length` and the at-most-adjacent-
// segments condition on the family member with segment_length * s_check
// vertices. Throws std::invalid_argument if s_check < 3, if the family has
// no member of that size, or for the two-opt family (not segment periodic).
RegularityReport is_regular(Family family, int s_check, int segment_length);

// Each of the n(n-1)/2 pairs independently gets cost 1 with probability p.
// Stream: std::mt19937_64 seeded with `seed`, one 53-bit draw per pair in
// lexicographic pair order.
Instance random_instance(int n, double p, std::uint64_t seed);

}  // namespace p12tsp

#endif  // P12TSP_CONSTRUCTIONS_HPP_
