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

#ifndef P12TSP_MOVES_HPP_
#define P12TSP_MOVES_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "p12tsp/core.hpp"

namespace p12tsp {

// Replacement of `arity` tour edges by as many non-tour edges. The removed
// and added sets are disjoint (normal form).
struct KMove {
  int arity = 0;
  std::array<Edge, 3> removed{};
  std::array<Edge, 3> added{};
  int gain = 0;

  // Enumeration metadata: tour positions of the removed edges (edge p joins
  // positions p and p+1) and the reconnection pattern. Pattern -1 marks a
  // 2-move; 0..3 are the pure 3-move reconnections.
  std::array<int, 3> positions{};
  int pattern = -1;

  std::span<const Edge> removed_edges() const noexcept {
    return {removed.data(), static_cast<std::size_t>(arity)};
  }
  std::span<const Edge> added_edges() const noexcept {
    return {added.data(), static_cast<std::size_t>(arity)};
  }

  // The move that undoes this one on the tour it produces.
  KMove inverse() const;
};

// Same removed and added edge sets, ignoring order, gain and metadata.
bool same_effect(const KMove& a, const KMove& b);

class InvalidMoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// `remove (u,v) (w,x) [(y,z)] add (a,b) (c,d) [(e,f)] gain g` with every pair
// canonical and each list sorted.
std::string format_move(const KMove& move);
KMove parse_move(std::string_view text);

enum class Predicate { kPlain, kPlusPlus };

std::string_view to_string(Predicate predicate);

// Smallest n accepted for a neighborhood of the given k (2 or 3).
int min_vertices_for(int k);

// Throws std::invalid_argument for k outside {2,3} or n below the minimum.
void require_neighborhood(int n, int k);

namespace detail {

inline bool adds_removed_or_repeats(const std::array<Edge, 3>& removed,
                                    const std::array<Edge, 3>& added) {
  for (int a = 0; a < 3; ++a) {
    for (int r = 0; r < 3; ++r) {
      if (added[static_cast<std::size_t>(a)] == removed[static_cast<std::size_t>(r)]) return true;
    }
    for (int b = a + 1; b < 3; ++b) {
      if (added[static_cast<std::size_t>(a)] == added[static_cast<std::size_t>(b)]) return true;
    }
  }
  return false;
}

inline bool same_added_set(const std::array<Edge, 3>& x, const std::array<Edge, 3>& y) {
  for (const Edge& e : x) {
    if (e != y[0] && e != y[1] && e != y[2]) return false;
  }
  return true;
}

}  // namespace detail

// Visits, in lexicographic order, every move whose least removed-edge
// position is `first`: for each j > first, the 2-move on (first, j) and then
// the pure 3-moves on (first, j, m) for m > j, pattern ids ascending.
// `visit(KMove&)` returns false to stop; the function returns false iff it
// was stopped. Gains are left at zero.
template <class Visit>
bool for_each_kmove_at(const Tour& tour, int k, int first, Visit&& visit) {
  const int n = tour.size();
  const int i = first;
  const Vertex a1 = tour[i];
  const Vertex b1 = tour[(i + 1) % n];
  KMove move;
  for (int j = i + 1; j < n; ++j) {
    const Vertex a2 = tour[j];
    const Vertex b2 = tour[(j + 1) % n];
    // Adjacent tour edges admit no 2-move other than the identity.
    const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
    if (!adjacent) {
      move.arity = 2;
      move.removed = {canonical(a1, b1), canonical(a2, b2), Edge{}};
      move.added = {canonical(a1, a2), canonical(b1, b2), Edge{}};
      move.positions = {i, j, 0};
      move.pattern = -1;
      move.gain = 0;
      if (!visit(move)) return false;
    }
    if (k < 3) continue;
    for (int m = j + 1; m < n; ++m) {
      const Vertex a3 = tour[m];
      const Vertex b3 = tour[(m + 1) % n];
      const std::array<Edge, 3> removed = {canonical(a1, b1), canonical(a2, b2),
                                           canonical(a3, b3)};
      // Segments S1 = [b1..a2], S2 = [b2..a3], S0 = [b3..a1]. With S0 kept in
      // place these are the four orders that replace all three edges.
      const std::array<std::array<Edge, 3>, 4> patterns = {{
          {canonical(a1, b2), canonical(a3, b1), canonical(a2, b3)},  // S0 S2 S1
          {canonical(a1, b2), canonical(a3, a2), canonical(b1, b3)},  // S0 S2 S1'
          {canonical(a1, a3), canonical(b2, b1), canonical(a2, b3)},  // S0 S2' S1
          {canonical(a1, a2), canonical(b1, a3), canonical(b2, b3)},  // S0 S1' S2'
      }};
      std::array<bool, 4> kept{};
      for (int p = 0; p < 4; ++p) {
        const auto& added = patterns[static_cast<std::size_t>(p)];
        // Empty segments collapse some patterns into 2-moves or duplicates.
        if (detail::adds_removed_or_repeats(removed, added)) continue;
        bool duplicate = false;
        for (int q = 0; q < p && !duplicate; ++q) {
          duplicate = kept[static_cast<std::size_t>(q)] &&
                      detail::same_added_set(patterns[static_cast<std::size_t>(q)], added);
        }
        if (duplicate) continue;
        kept[static_cast<std::size_t>(p)] = true;
        move.arity = 3;
        move.removed = removed;
        move.added = added;
        move.positions = {i, j, m};
        move.pattern = p;
        move.gain = 0;
        if (!visit(move)) return false;
      }
    }
  }
  return true;
}

// Visits the whole (<= k)-move neighborhood in lexicographic order.
template <class Visit>
bool for_each_kmove(const Tour& tour, int k, Visit&& visit) {
  require_neighborhood(tour.size(), k);
  for (int i = 0; i < tour.size(); ++i) {
    if (!for_each_kmove_at(tour, k, i, visit)) return false;
  }
  return true;
}

// Materialized enumeration; gains unfilled.
std::vector<KMove> enumerate_kmoves(const Tour& tour, int k);

// Number of moves in the (<= k)-move neighborhood of an n-vertex tour.
std::int64_t neighborhood_size(const Tour& tour, int k);

// Sum of removed costs minus sum of added costs. Throws InvalidMoveError if
// a removed edge is not on the tour.
int move_gain(const Instance& instance, const Tour& tour, const KMove& move);

// Gain without the tour-membership check.
inline int move_gain_unchecked(const Instance& instance, const KMove& move) {
  int gain = 0;
  for (int e = 0; e < move.arity; ++e) {
    const auto idx = static_cast<std::size_t>(e);
    gain += instance.cost_unchecked(move.removed[idx].u, move.removed[idx].v);
    gain -= instance.cost_unchecked(move.added[idx].u, move.added[idx].v);
  }
  return gain;
}

// Rebuilds the tour from (tour edges - removed) + added, starting at the
// same first vertex and keeping its original direction when possible.
// Throws InvalidMoveError for a malformed move and std::logic_error if the
// result is not a single Hamiltonian cycle.
Tour apply_move(const Tour& tour, const KMove& move);

// Number of length-0 1-paths: vertices whose two tour edges both cost 2.
int count_zero_paths(const Instance& instance, const Tour& tour);

// Change in count_zero_paths caused by applying `move`, computed from the
// endpoints of the removed edges only.
int zero_path_delta(const Instance& instance, const Tour& tour, const KMove& move);

// gain >= 1, or gain == 0 and the move removes at least one length-0 path.
bool is_improving_pp(const Instance& instance, const Tour& tour, const KMove& move);

// Outcome of scanning a neighborhood for the first qualifying move.
struct NeighborhoodScan {
  std::optional<KMove> first_improving;  // gain filled
  std::int64_t moves_examined = 0;       // up to and including the hit
};

// Reference implementation: one thread, enumeration order.
NeighborhoodScan scan_neighborhood_serial(const Instance& instance, const Tour& tour, int k,
                                          Predicate predicate);

// OpenMP implementation partitioned by the least removed-edge position.
// Returns exactly what the serial scan returns for any worker count.
NeighborhoodScan scan_neighborhood_parallel(const Instance& instance, const Tour& tour, int k,
                                            Predicate predicate, int workers);

// Dispatches to the serial scan for workers <= 1.
NeighborhoodScan scan_neighborhood(const Instance& instance, const Tour& tour, int k,
                                   Predicate predicate, int workers = 1);

std::optional<KMove> find_improving(const Instance& instance, const Tour& tour, int k,
                                    Predicate predicate, int workers = 1);

struct SearchStats {
  int iterations = 0;  // neighborhood scans
  int moves_applied = 0;
  int final_cost = 0;
  int final_zero_paths = 0;
};

// First-improvement descent until no qualifying move remains.
std::pair<Tour, SearchStats> local_search(const Instance& instance, const Tour& start, int k,
                                          Predicate predicate, int workers = 1);

// Uniform random tour from a 64-bit seed, reproducible across platforms.
Tour random_tour(int n, std::uint64_t seed);

}  // namespace p12tsp

#endif  // P12TSP_MOVES_HPP_
