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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "p12tsp/constructions.hpp"
#include "p12tsp/core.hpp"

namespace p12tsp {
namespace {

TEST(Instance, RejectsMalformedInput) {
  EXPECT_THROW(Instance(2, {}), std::invalid_argument);
  EXPECT_THROW(Instance(4, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Instance(4, {{0, 4}}), std::invalid_argument);
  EXPECT_THROW(Instance(4, {{-1, 2}}), std::invalid_argument);
  EXPECT_THROW(Instance(4, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_NO_THROW(Instance(3, {}));
}

TEST(Instance, StoresCanonicalSortedEdges) {
  const Instance inst(5, {{3, 1}, {0, 4}, {2, 0}});
  const std::vector<Edge> expected = {{0, 2}, {0, 4}, {1, 3}};
  EXPECT_EQ(inst.cost1(), expected);
  EXPECT_EQ(inst.cost1_degree(0), 2);
  EXPECT_EQ(inst.cost1_degree(2), 1);
}

TEST(Instance, CostLookupChecksArguments) {
  const Instance inst(4, {{0, 1}});
  EXPECT_THROW((void)inst.cost(0, 0), std::invalid_argument);
  EXPECT_THROW((void)inst.cost(0, 4), std::invalid_argument);
  EXPECT_EQ(inst.cost(1, 0), 1);
  EXPECT_EQ(inst.cost(2, 3), 2);
}

TEST(CostEdge, TwoOptChordsAndOtherPairs) {
  const Instance inst = gen_two_opt_lb(8).instance;
  EXPECT_EQ(cost_edge(inst, 0, 2), 1);  // v1, v3
  EXPECT_EQ(cost_edge(inst, 1, 3), 2);  // v2, v4
}

TEST(CostEdge, SymmetricAndMatchesOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = oracle::random_instance(9, 0.4, rng);
    for (Vertex u = 0; u < 9; ++u) {
      for (Vertex v = 0; v < 9; ++v) {
        if (u == v) continue;
        EXPECT_EQ(cost_edge(inst, u, v), cost_edge(inst, v, u));
        EXPECT_EQ(cost_edge(inst, u, v), oracle::cost(inst, u, v));
      }
    }
  }
}

TEST(CostEdge, SparseTableAgreesWithDenseAboveLimit) {
  const int n = 5000;
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 7 < n; v += 3) edges.push_back(Edge{v, v + 7});
  const Instance inst(n, edges);
  EXPECT_EQ(inst.cost(0, 7), 1);
  EXPECT_EQ(inst.cost(7, 0), 1);
  EXPECT_EQ(inst.cost(1, 8), 2);
  EXPECT_EQ(inst.cost(4992, 4999), 1);
}

TEST(TourCost, SpecExamples) {
  EXPECT_EQ(tour_cost(gen_two_opt_lb(8).instance, gen_two_opt_lb(8).tour), 11);
  const auto three = gen_three_opt_lb(12);
  EXPECT_EQ(tour_cost(three.instance, three.tour), 132);
  EXPECT_EQ(tour_cost(fixture::ring(5), Tour::identity(5)), 5);
}

TEST(ValidateTour, SpecExamples) {
  const std::vector<Vertex> ok = {0, 1, 2, 3};
  const std::vector<Vertex> dup = {0, 1, 1, 3};
  const std::vector<Vertex> short_order = {0, 1, 2};
  EXPECT_EQ(validate_tour(4, ok), TourDefect::kNone);
  EXPECT_EQ(validate_tour(4, dup), TourDefect::kDuplicateVertex);
  EXPECT_EQ(validate_tour(4, short_order), TourDefect::kWrongLength);
}

TEST(ValidateTour, RangeAndMissingVertex) {
  const std::vector<Vertex> out_of_range = {0, 1, 2, 4};
  const std::vector<Vertex> negative = {0, -1, 2, 3};
  // Vertex 1 appears twice and 2 never: the smaller id decides.
  const std::vector<Vertex> dup_first = {0, 1, 1, 3};
  // Vertex 1 is missing and 3 appears twice.
  const std::vector<Vertex> missing_first = {0, 3, 2, 3};
  EXPECT_EQ(validate_tour(4, out_of_range), TourDefect::kVertexOutOfRange);
  EXPECT_EQ(validate_tour(4, negative), TourDefect::kVertexOutOfRange);
  EXPECT_EQ(validate_tour(4, dup_first), TourDefect::kDuplicateVertex);
  EXPECT_EQ(validate_tour(4, missing_first), TourDefect::kMissingVertex);
}

TEST(Tour, ConstructorCarriesDefect) {
  try {
    Tour({0, 1, 1, 3});
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.defect(), TourDefect::kDuplicateVertex);
  }
  EXPECT_THROW(Tour({0, 1}), ValidationError);
}

TEST(Tour, NeighboursAndEdges) {
  const Tour t({2, 0, 3, 1});
  EXPECT_EQ(t.next(1), 2);
  EXPECT_EQ(t.prev(2), 1);
  EXPECT_EQ(t.position(3), 2);
  EXPECT_TRUE(t.has_edge(0, 2));
  EXPECT_FALSE(t.has_edge(0, 1));
  const std::vector<Edge> expected = {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  EXPECT_EQ(t.edge_set(), expected);
}

TEST(Tour, RequireTourForChecksSize) {
  const Instance inst(5, {});
  EXPECT_THROW(require_tour_for(inst, Tour::identity(4)), ValidationError);
  EXPECT_NO_THROW(require_tour_for(inst, Tour::identity(5)));
}

TEST(Decomposition, PlusPlusFamilyPaths) {
  const auto fam = gen_three_opt_pp_lb(2);
  const PathDecomposition d = one_path_decomposition(fam.instance, fam.tour);
  ASSERT_FALSE(d.whole_cycle);
  const std::vector<std::vector<Vertex>> expected = {
      {0, 1}, {2, 3, 4, 5}, {6, 7}, {8, 9, 10, 11}};
  EXPECT_EQ(d.paths, expected);
  std::vector<int> lengths;
  for (const auto& p : d.paths) lengths.push_back(PathDecomposition::edge_count(p));
  EXPECT_EQ(lengths, (std::vector<int>{1, 3, 1, 3}));
  EXPECT_EQ(d.path_of[4], 1);
}

TEST(Decomposition, WholeCycle) {
  const PathDecomposition d = one_path_decomposition(fixture::all_ones(6), Tour({3, 1, 0, 5, 2, 4}));
  EXPECT_TRUE(d.whole_cycle);
  EXPECT_EQ(d.count(), 0u);
  EXPECT_TRUE(std::all_of(d.path_of.begin(), d.path_of.end(), [](int id) { return id == -1; }));
}

TEST(Decomposition, ThreeOptFamilyIsolatedVertices) {
  const auto fam = gen_three_opt_lb(3);
  const PathDecomposition d = one_path_decomposition(fam.instance, fam.tour);
  std::vector<Vertex> isolated;
  for (const auto& p : d.paths) {
    if (p.size() == 1) isolated.push_back(p.front());
  }
  EXPECT_EQ(isolated, (std::vector<Vertex>{6, 7, 14, 15, 22, 23}));
}

std::vector<std::vector<Vertex>> normalized(const PathDecomposition& d) {
  std::vector<std::vector<Vertex>> out;
  for (auto p : d.paths) {
    if (p.front() > p.back()) std::reverse(p.begin(), p.end());
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(CoreProperties, CountsDecompositionAndSymmetries) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 12);
    const Instance inst = oracle::random_instance(n, 0.1 + 0.8 * static_cast<double>(trial % 9) / 8.0, rng);
    const Tour tour = oracle::random_tour(n, rng);
    const EdgeCounts c = classify_tour_edges(inst, tour);
    EXPECT_EQ(c.h + c.l, n);
    EXPECT_EQ(tour_cost(inst, tour), c.h + 2 * c.l);
    EXPECT_EQ(tour_cost(inst, tour), oracle::cost_of(inst, oracle::order_of(tour)));

    const PathDecomposition d = one_path_decomposition(inst, tour);
    EXPECT_EQ(d.whole_cycle, c.l == 0);
    if (c.l == 0) continue;
    EXPECT_EQ(static_cast<int>(d.count()), c.l);
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t id = 0; id < d.paths.size(); ++id) {
      const auto& p = d.paths[id];
      for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_EQ(inst.cost(p[i], p[i + 1]), 1);
      EXPECT_EQ(inst.cost(tour.prev(p.front()), p.front()), 2);
      EXPECT_EQ(inst.cost(p.back(), tour.next(p.back())), 2);
      for (Vertex v : p) {
        ++seen[static_cast<std::size_t>(v)];
        EXPECT_EQ(d.path_of[static_cast<std::size_t>(v)], static_cast<int>(id));
      }
      if (id > 0) {
        EXPECT_LT(tour.position(d.paths[id - 1].front()), tour.position(p.front()));
      }
    }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));

    // Rotation and reversal leave the set of paths unchanged.
    std::vector<Vertex> rotated(tour.order().begin(), tour.order().end());
    std::rotate(rotated.begin(), rotated.begin() + static_cast<long>(rng() % static_cast<unsigned>(n)), rotated.end());
    std::vector<Vertex> reversed(rotated.rbegin(), rotated.rend());
    EXPECT_EQ(normalized(one_path_decomposition(inst, Tour(rotated))), normalized(d));
    EXPECT_EQ(normalized(one_path_decomposition(inst, Tour(reversed))), normalized(d));
  }
}

}  // namespace
}  // namespace p12tsp
