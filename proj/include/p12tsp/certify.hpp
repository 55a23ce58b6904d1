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

#ifndef P12TSP_CERTIFY_HPP_
#define P12TSP_CERTIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p12tsp/core.hpp"
#include "p12tsp/moves.hpp"

namespace p12tsp {

// Result of exhaustively searching a (<= k)-move neighborhood.
//
// An optimal verdict carries no witness and `moves_examined` equals the
// neighborhood size. Otherwise the witness is the lexicographically least
// qualifying move and `moves_examined` counts the moves up to and including
// it, so serial and parallel certification agree exactly.
struct Certificate {
  bool optimal = false;
  std::optional<KMove> witness;
  std::int64_t moves_examined = 0;
  Predicate predicate = Predicate::kPlain;
  int k = 3;
};

Certificate certify_k_optimal(const Instance& instance, const Tour& tour, int k, int workers = 1);
Certificate certify_kpp_optimal(const Instance& instance, const Tour& tour, int k, int workers = 1);

// `verdict=<optimal|non-optimal> k=<k> predicate=<plain|pp> examined=<m>`,
// followed by a line holding format_move(witness) when there is one.
std::string format_certificate(const Certificate& certificate);

// Vertices p, q, u, v, a, b with {p,u}, {q,v}, {a,b} on the tour,
// c(p,u) = c(q,v) = 2, c(a,u) = c(b,v) = 1, and p, q, a, b all on one of the
// two tour arcs strictly between u and v.
struct Constellation {
  Vertex p = 0;
  Vertex q = 0;
  Vertex u = 0;
  Vertex v = 0;
  Vertex a = 0;
  Vertex b = 0;

  friend bool operator==(const Constellation&, const Constellation&) = default;

  // The 3-move exchanging {p,u}, {q,v}, {a,b} for {p,q}, {a,u}, {b,v}.
  KMove as_move() const;
};

std::optional<Constellation> find_forbidden_constellation(const Instance& instance, const Tour& tour);

// Pairs (p, q), p < q, of endpoints of different 1-paths with c(p,q) = 1.
// The vertex of a length-0 path counts as its endpoint.
std::vector<std::pair<Vertex, Vertex>> endpoint_pair_violations(const Instance& instance,
                                                                const Tour& tour);

}  // namespace p12tsp

#endif  // P12TSP_CERTIFY_HPP_
