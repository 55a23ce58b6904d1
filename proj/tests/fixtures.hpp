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

#ifndef P12TSP_TESTS_FIXTURES_HPP_
#define P12TSP_TESTS_FIXTURES_HPP_

#include "p12tsp/core.hpp"

namespace p12tsp::fixture {

// Six vertices: a 5-cycle 1-2-3-4-5 of cost-1 edges plus {0,2}. The
// identity tour has the isolated vertex 0 and the path 1..5; the optimum
// (0,2,3,4,5,1) costs 7.
inline Instance hexa() { return Instance(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {0, 2}}); }
inline Tour hexa_tour() { return Tour::identity(6); }
inline Tour hexa_optimal() { return Tour({0, 2, 3, 4, 5, 1}); }

// Isolated vertex 0 whose only cost-1 edge goes to the interior vertex 4 of
// the path 1..7. The identity tour is 3-optimal but admits a cost-neutral
// move that absorbs vertex 0.
inline Instance absorb() {
  return Instance(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {0, 4}});
}

// Identity tour whose only cost-2 edges are {0,1} and {6,7}, with the chords
// {3,0} and {4,7}: the vertices (p,q,u,v,a,b) = (1,6,0,7,3,4) form the
// six-vertex pattern that a 3-optimal tour cannot contain.
inline Instance planted_constellation() {
  return Instance(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 7}, {0, 3}, {4, 7}});
}

// Complete cost-1 graph.
inline Instance all_ones(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
  }
  return Instance(n, std::move(edges));
}

// Cost-1 edges exactly along the identity cycle.
inline Instance ring(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back(Edge{v, v + 1});
  edges.push_back(Edge{0, n - 1});
  return Instance(n, std::move(edges));
}

}  // namespace p12tsp::fixture

#endif  // P12TSP_TESTS_FIXTURES_HPP_
