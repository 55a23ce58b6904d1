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

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "p12tsp/analysis.hpp"
#include "p12tsp/certify.hpp"
#include "p12tsp/constructions.hpp"

namespace p12tsp {
namespace {

int cost2_tour_edges(const FamilyOutput& f) { return classify_tour_edges(f.instance, f.tour).l; }

TEST(TwoOptFamily, CostsAndRatios) {
  const auto f8 = gen_two_opt_lb(8);
  EXPECT_EQ(tour_cost(f8.instance, f8.tour), 11);
  EXPECT_EQ(tour_cost(f8.instance, f8.reference_tour), 8);
  const auto f7 = gen_two_opt_lb(7);
  EXPECT_EQ(tour_cost(f7.instance, f7.tour), 9);
  EXPECT_EQ(tour_cost(f7.instance, f7.reference_tour), 7);
  const auto f40 = gen_two_opt_lb(40);
  EXPECT_EQ(ratio_report(f40.instance, f40.tour, f40.reference_tour).ratio, Rational(59, 40));
  EXPECT_THROW(gen_two_opt_lb(6), std::invalid_argument);
}

TEST(TwoOptFamily, CertifiedAndFormulaAcrossSizes) {
  for (int n = 7; n <= 30; ++n) {
    const auto f = gen_two_opt_lb(n);
    EXPECT_EQ(f.claimed_tour_cost, n + (n - 2) / 2);
    EXPECT_EQ(tour_cost(f.instance, f.tour), n + (n - 2) / 2);
    EXPECT_EQ(tour_cost(f.instance, f.reference_tour), n);
    EXPECT_TRUE(certify_k_optimal(f.instance, f.tour, 2).optimal) << "n=" << n;
  }
}

TEST(ThreeOptFamily, SmallestMember) {
  const auto f = gen_three_opt_lb(3);
  EXPECT_EQ(f.instance.size(), 24);
  EXPECT_EQ(tour_cost(f.instance, f.tour), 33);
  EXPECT_LE(tour_cost(f.instance, f.reference_tour), 28);
  EXPECT_THROW(gen_three_opt_lb(2), std::invalid_argument);
}

TEST(ThreeOptFamily, ReferenceBoundAndValidity) {
  for (int s = 3; s <= 20; ++s) {
    const Tour ref = build_three_opt_reference(s);
    EXPECT_EQ(validate_tour(8 * s, ref.order()), TourDefect::kNone);
    EXPECT_LE(tour_cost(gen_three_opt_lb(s).instance, ref), 8 * s + 4) << "s=" << s;
  }
  const auto f12 = gen_three_opt_lb(12);
  EXPECT_LE(tour_cost(f12.instance, f12.reference_tour), 100);
  EXPECT_GE(ratio_report(f12.instance, f12.tour, f12.reference_tour).ratio, Rational(132, 100));
}

TEST(ThreeOptFamily, CostTwoTourEdgesPerSegment) {
  for (int s = 3; s <= 8; ++s) {
    const auto f = gen_three_opt_lb(s);
    EXPECT_EQ(cost2_tour_edges(f), 3 * s);
    for (int h = 0; h < s; ++h) {
      const int b = 8 * h;
      EXPECT_EQ(f.instance.cost(b + 5, b + 6), 2);
      EXPECT_EQ(f.instance.cost(b + 6, b + 7), 2);
      EXPECT_EQ(f.instance.cost(b + 7, (b + 8) % (8 * s)), 2);
    }
  }
}

TEST(ThreeOptFamily, CertifiedThreeOptimal) {
  for (int s : {3, 4, 5, 6, 12}) {
    const auto f = gen_three_opt_lb(s);
    EXPECT_TRUE(certify_k_optimal(f.instance, f.tour, 3).optimal) << "s=" << s;
  }
}

TEST(ThreeOptFamily, NotPlusPlusOptimal) {
  for (int s : {12, 20}) {
    const auto f = gen_three_opt_lb(s);
    const Certificate c = certify_kpp_optimal(f.instance, f.tour, 3);
    ASSERT_FALSE(c.optimal);
    EXPECT_EQ(c.witness->gain, 0);
  }
}

TEST(PlusPlusFamily, CostsAndReference) {
  const auto f = gen_three_opt_pp_lb(2);
  EXPECT_EQ(f.instance.size(), 12);
  EXPECT_EQ(tour_cost(f.instance, f.tour), 16);
  EXPECT_EQ(tour_cost(f.instance, f.reference_tour), 12);
  for (int s = 2; s <= 10; ++s) {
    const auto g = gen_three_opt_pp_lb(s);
    EXPECT_EQ(classify_tour_edges(g.instance, g.reference_tour).l, 0);
    EXPECT_EQ(cost2_tour_edges(g), 2 * s);
    EXPECT_EQ(count_zero_paths(g.instance, g.tour), 0);
  }
  EXPECT_THROW(gen_three_opt_pp_lb(1), std::invalid_argument);
}

TEST(PlusPlusFamily, CertifiedAtSixSegments) {
  const auto f = gen_three_opt_pp_lb(6);
  EXPECT_EQ(tour_cost(f.instance, f.tour), 48);
  EXPECT_TRUE(certify_kpp_optimal(f.instance, f.tour, 3).optimal);
  EXPECT_TRUE(certify_k_optimal(f.instance, f.tour, 3).optimal);
}

TEST(Regularity, SpecVerdicts) {
  EXPECT_TRUE(is_regular(Family::kThreeOptPpLb, 6, 6).regular);
  const RegularityReport eight = is_regular(Family::kThreeOptLb, 6, 8);
  EXPECT_FALSE(eight.regular);
  EXPECT_EQ(eight.violated_condition, 3);
  ASSERT_TRUE(eight.violation.has_value());
  // The first cost-1 pair spanning two segments comes from the template
  // {8h+7, 8(h+2)+1}, here with the wrap-around h = s-2.
  const Edge e = *eight.violation;
  const bool template_pair = ((e.u % 8 == 7 && e.v % 8 == 1) || (e.u % 8 == 1 && e.v % 8 == 7));
  EXPECT_TRUE(template_pair) << to_string(e);
  EXPECT_TRUE(is_regular(Family::kThreeOptLb, 6, 16).regular);
}

TEST(Regularity, HoldsAcrossSizes) {
  for (int s_check = 3; s_check <= 10; ++s_check) {
    EXPECT_TRUE(is_regular(Family::kThreeOptPpLb, s_check, 6).regular) << s_check;
    EXPECT_TRUE(is_regular(Family::kThreeOptLb, s_check, 16).regular) << s_check;
  }
  for (int s_check = 5; s_check <= 10; ++s_check) {
    EXPECT_FALSE(is_regular(Family::kThreeOptLb, s_check, 8).regular) << s_check;
  }
}

TEST(Regularity, Errors) {
  EXPECT_THROW(is_regular(Family::kTwoOptLb, 6, 1), std::invalid_argument);
  EXPECT_THROW(is_regular(Family::kThreeOptPpLb, 2, 6), std::invalid_argument);
  EXPECT_THROW(is_regular(Family::kThreeOptPpLb, 5, 5), std::invalid_argument);
  EXPECT_THROW(is_regular(Family::kThreeOptLb, 3, 12), std::invalid_argument);
  EXPECT_THROW(is_regular(Family::kThreeOptLb, 6, 0), std::invalid_argument);
}

TEST(FamilyNames, RoundTrip) {
  for (Family f : {Family::kTwoOptLb, Family::kThreeOptLb, Family::kThreeOptPpLb}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  EXPECT_FALSE(parse_family("four-opt").has_value());
}

TEST(RandomInstance, Extremes) {
  const Instance ones = random_instance(9, 1.0, 3);
  EXPECT_EQ(ones.cost1().size(), 36u);
  EXPECT_TRUE(random_instance(9, 0.0, 3).cost1().empty());
}

TEST(RandomInstance, DeterministicPerSeed) {
  EXPECT_EQ(random_instance(20, 0.4, 99), random_instance(20, 0.4, 99));
  EXPECT_FALSE(random_instance(20, 0.4, 99) == random_instance(20, 0.4, 100));
}

TEST(RandomInstance, EdgeDensityNearP) {
  const int n = 200;
  const double pairs = n * (n - 1) / 2.0;
  for (double p : {0.1, 0.5, 0.9}) {
    const double count = static_cast<double>(random_instance(n, p, 7).cost1().size());
    EXPECT_LT(std::abs(count - p * pairs), 5.0 * std::sqrt(pairs * p * (1 - p)));
  }
}

TEST(RandomInstance, Errors) {
  EXPECT_THROW(random_instance(4, 0.5, 1), std::invalid_argument);
  EXPECT_THROW(random_instance(8, -0.1, 1), std::invalid_argument);
  EXPECT_THROW(random_instance(8, 1.5, 1), std::invalid_argument);
}

}  // namespace
}  // namespace p12tsp
