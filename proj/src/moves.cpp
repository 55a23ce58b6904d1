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

#include "p12tsp/moves.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <numeric>
#include <sstream>

#include "rng.hpp"

namespace p12tsp {

KMove KMove::inverse() const {
  KMove inv = *this;
  std::swap(inv.removed, inv.added);
  inv.gain = -gain;
  inv.pattern = -1;
  inv.positions = {};
  return inv;
}

bool same_effect(const KMove& a, const KMove& b) {
  if (a.arity != b.arity) return false;
  auto sorted = [](std::span<const Edge> edges) {
    std::vector<Edge> v;
    for (Edge e : edges) v.push_back(canonical(e.u, e.v));
    std::sort(v.begin(), v.end());
    return v;
  };
  return sorted(a.removed_edges()) == sorted(b.removed_edges()) &&
         sorted(a.added_edges()) == sorted(b.added_edges());
}

std::string format_move(const KMove& move) {
  auto sorted = [](std::span<const Edge> edges) {
    std::vector<Edge> v;
    for (Edge e : edges) v.push_back(canonical(e.u, e.v));
    std::sort(v.begin(), v.end());
    return v;
  };
  std::ostringstream out;
  out << "remove";
  for (Edge e : sorted(move.removed_edges())) out << ' ' << to_string(e);
  out << " add";
  for (Edge e : sorted(move.added_edges())) out << ' ' << to_string(e);
  out << " gain " << move.gain;
  return out.str();
}

namespace {

[[noreturn]] void bad_move_text(std::string_view text) {
  throw InvalidMoveError("malformed move: '" + std::string(text) + "'");
}

Edge parse_pair(std::string_view token, std::string_view text) {
  if (token.size() < 5 || token.front() != '(' || token.back() != ')') bad_move_text(text);
  const auto comma = token.find(',');
  if (comma == std::string_view::npos) bad_move_text(text);
  auto number = [&](std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) bad_move_text(text);
    return value;
  };
  const int u = number(token.substr(1, comma - 1));
  const int v = number(token.substr(comma + 1, token.size() - comma - 2));
  return canonical(u, v);
}

}  // namespace

KMove parse_move(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  KMove move;
  if (!(in >> token) || token != "remove") bad_move_text(text);
  std::vector<Edge> removed;
  std::vector<Edge> added;
  while (in >> token && token != "add") removed.push_back(parse_pair(token, text));
  if (token != "add") bad_move_text(text);
  while (in >> token && token != "gain") added.push_back(parse_pair(token, text));
  if (token != "gain" || !(in >> move.gain)) bad_move_text(text);
  if (in >> token) bad_move_text(text);
  if (removed.size() != added.size() || removed.size() < 2 || removed.size() > 3) {
    bad_move_text(text);
  }
  move.arity = static_cast<int>(removed.size());
  std::copy(removed.begin(), removed.end(), move.removed.begin());
  std::copy(added.begin(), added.end(), move.added.begin());
  return move;
}

std::string_view to_string(Predicate predicate) {
  return predicate == Predicate::kPlain ? "plain" : "pp";
}

int min_vertices_for(int k) { return k == 2 ? 4 : 5; }

void require_neighborhood(int n, int k) {
  if (k != 2 && k != 3) {
    throw std::invalid_argument("k must be 2 or 3, got " + std::to_string(k));
  }
  if (n < min_vertices_for(k)) {
    throw std::invalid_argument("k=" + std::to_string(k) + " needs n >= " +
                                std::to_string(min_vertices_for(k)) + ", got " + std::to_string(n));
  }
}

std::vector<KMove> enumerate_kmoves(const Tour& tour, int k) {
  std::vector<KMove> moves;
  for_each_kmove(tour, k, [&](const KMove& m) {
    moves.push_back(m);
    return true;
  });
  return moves;
}

std::int64_t neighborhood_size(const Tour& tour, int k) {
  std::int64_t count = 0;
  for_each_kmove(tour, k, [&](const KMove&) {
    ++count;
    return true;
  });
  return count;
}

int move_gain(const Instance& instance, const Tour& tour, const KMove& move) {
  require_tour_for(instance, tour);
  for (Edge e : move.removed_edges()) {
    if (e.u < 0 || e.v < 0 || e.u >= tour.size() || e.v >= tour.size() || e.u == e.v ||
        !tour.has_edge(e.u, e.v)) {
      throw InvalidMoveError("removed edge " + to_string(e) + " is not a tour edge");
    }
  }
  for (Edge e : move.added_edges()) {
    if (e.u < 0 || e.v < 0 || e.u >= tour.size() || e.v >= tour.size() || e.u == e.v) {
      throw InvalidMoveError("added edge " + to_string(e) + " is not a vertex pair");
    }
  }
  return move_gain_unchecked(instance, move);
}

Tour apply_move(const Tour& tour, const KMove& move) {
  const int n = tour.size();
  constexpr Vertex kFree = -1;
  std::vector<std::array<Vertex, 2>> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = {tour.prev(v), tour.next(v)};

  auto in_range = [n](Edge e) { return e.u >= 0 && e.v >= 0 && e.u < n && e.v < n && e.u != e.v; };
  auto detach = [&](Vertex from, Vertex to) {
    auto& slots = adj[static_cast<std::size_t>(from)];
    auto it = std::find(slots.begin(), slots.end(), to);
    if (it == slots.end()) return false;
    *it = kFree;
    return true;
  };
  auto attach = [&](Vertex from, Vertex to) {
    auto& slots = adj[static_cast<std::size_t>(from)];
    if (std::find(slots.begin(), slots.end(), to) != slots.end()) return false;
    auto it = std::find(slots.begin(), slots.end(), kFree);
    if (it == slots.end()) return false;
    *it = to;
    return true;
  };

  for (Edge e : move.removed_edges()) {
    if (!in_range(e) || !detach(e.u, e.v) || !detach(e.v, e.u)) {
      throw InvalidMoveError("removed edge " + to_string(e) + " is not a tour edge");
    }
  }
  for (Edge e : move.added_edges()) {
    if (!in_range(e) || !attach(e.u, e.v) || !attach(e.v, e.u)) {
      throw InvalidMoveError("added edge " + to_string(e) + " cannot be inserted");
    }
  }
  for (const auto& slots : adj) {
    if (slots[0] == kFree || slots[1] == kFree) {
      throw InvalidMoveError("move leaves a vertex with degree below two");
    }
  }

  const Vertex start = tour[0];
  const auto& first_slots = adj[static_cast<std::size_t>(start)];
  Vertex step = std::min(first_slots[0], first_slots[1]);
  if (first_slots[0] == tour.next(start) || first_slots[1] == tour.next(start)) {
    step = tour.next(start);
  } else if (first_slots[0] == tour.prev(start) || first_slots[1] == tour.prev(start)) {
    step = tour.prev(start);
  }

  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  order.push_back(start);
  Vertex before = start;
  Vertex current = step;
  while (current != start) {
    if (static_cast<int>(order.size()) >= n) break;
    order.push_back(current);
    const auto& slots = adj[static_cast<std::size_t>(current)];
    const Vertex following = slots[0] == before ? slots[1] : slots[0];
    before = current;
    current = following;
  }
  if (static_cast<int>(order.size()) != n || current != start) {
    throw std::logic_error("move does not yield a single Hamiltonian cycle: " + format_move(move));
  }
  return Tour(std::move(order));
}

int count_zero_paths(const Instance& instance, const Tour& tour) {
  require_tour_for(instance, tour);
  int count = 0;
  for (Vertex v = 0; v < tour.size(); ++v) {
    if (instance.cost_unchecked(v, tour.prev(v)) == 2 && instance.cost_unchecked(v, tour.next(v)) == 2) {
      ++count;
    }
  }
  return count;
}

int zero_path_delta(const Instance& instance, const Tour& tour, const KMove& move) {
  std::array<Vertex, 6> touched{};
  int touched_count = 0;
  for (Edge e : move.removed_edges()) {
    for (Vertex x : {e.u, e.v}) {
      const auto end = touched.begin() + touched_count;
      if (std::find(touched.begin(), end, x) == end) touched[static_cast<std::size_t>(touched_count++)] = x;
    }
  }
  int delta = 0;
  for (int t = 0; t < touched_count; ++t) {
    const Vertex x = touched[static_cast<std::size_t>(t)];
    std::array<Vertex, 4> nbrs = {tour.prev(x), tour.next(x), -1, -1};
    for (Edge e : move.removed_edges()) {
      const Vertex other = e.u == x ? e.v : (e.v == x ? e.u : -1);
      if (other < 0) continue;
      auto it = std::find(nbrs.begin(), nbrs.end(), other);
      if (it != nbrs.end()) *it = -1;
    }
    for (Edge e : move.added_edges()) {
      const Vertex other = e.u == x ? e.v : (e.v == x ? e.u : -1);
      if (other < 0) continue;
      *std::find(nbrs.begin(), nbrs.end(), -1) = other;
    }
    bool zero_after = true;
    for (Vertex y : nbrs) {
      if (y >= 0 && instance.cost_unchecked(x, y) == 1) zero_after = false;
    }
    const bool zero_before = instance.cost_unchecked(x, tour.prev(x)) == 2 &&
                             instance.cost_unchecked(x, tour.next(x)) == 2;
    delta += static_cast<int>(zero_after) - static_cast<int>(zero_before);
  }
  return delta;
}

bool is_improving_pp(const Instance& instance, const Tour& tour, const KMove& move) {
  const int gain = move_gain(instance, tour, move);
  if (gain >= 1) return true;
  return gain == 0 && zero_path_delta(instance, tour, move) < 0;
}

namespace {

// Fills the gain and reports whether the move satisfies the predicate.
inline bool qualifies(const Instance& instance, const Tour& tour, Predicate predicate, KMove& move) {
  move.gain = move_gain_unchecked(instance, move);
  if (move.gain >= 1) return true;
  return predicate == Predicate::kPlusPlus && move.gain == 0 &&
         zero_path_delta(instance, tour, move) < 0;
}

void require_scan_args(const Instance& instance, const Tour& tour, int k) {
  require_tour_for(instance, tour);
  require_neighborhood(tour.size(), k);
}

}  // namespace

NeighborhoodScan scan_neighborhood_serial(const Instance& instance, const Tour& tour, int k,
                                          Predicate predicate) {
  require_scan_args(instance, tour, k);
  NeighborhoodScan scan;
  for_each_kmove(tour, k, [&](KMove& move) {
    ++scan.moves_examined;
    if (qualifies(instance, tour, predicate, move)) {
      scan.first_improving = move;
      return false;
    }
    return true;
  });
  return scan;
}

NeighborhoodScan scan_neighborhood_parallel(const Instance& instance, const Tour& tour, int k,
                                            Predicate predicate, int workers) {
  require_scan_args(instance, tour, k);
  const int n = tour.size();
  std::vector<std::int64_t> slice_examined(static_cast<std::size_t>(n), 0);
  std::vector<std::optional<KMove>> slice_hit(static_cast<std::size_t>(n));
  // Least slice holding a qualifying move so far; larger slices are skipped.
  std::atomic<int> best_slice{n};

#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(workers, 1))
  for (int i = 0; i < n; ++i) {
    if (i > best_slice.load(std::memory_order_relaxed)) continue;
    std::int64_t examined = 0;
    std::optional<KMove> hit;
    for_each_kmove_at(tour, k, i, [&](KMove& move) {
      ++examined;
      if (qualifies(instance, tour, predicate, move)) {
        hit = move;
        return false;
      }
      return true;
    });
    const auto idx = static_cast<std::size_t>(i);
    slice_examined[idx] = examined;
    if (hit) {
      slice_hit[idx] = std::move(hit);
      int current = best_slice.load(std::memory_order_relaxed);
      while (i < current && !best_slice.compare_exchange_weak(current, i)) {
      }
    }
  }

  NeighborhoodScan scan;
  const int best = best_slice.load();
  const int last = best < n ? best : n - 1;
  // Every slice below `best` was scanned to completion.
  for (int i = 0; i <= last; ++i) scan.moves_examined += slice_examined[static_cast<std::size_t>(i)];
  if (best < n) scan.first_improving = slice_hit[static_cast<std::size_t>(best)];
  return scan;
}

NeighborhoodScan scan_neighborhood(const Instance& instance, const Tour& tour, int k,
                                   Predicate predicate, int workers) {
  if (workers <= 1) return scan_neighborhood_serial(instance, tour, k, predicate);
  return scan_neighborhood_parallel(instance, tour, k, predicate, workers);
}

std::optional<KMove> find_improving(const Instance& instance, const Tour& tour, int k,
                                    Predicate predicate, int workers) {
  return scan_neighborhood(instance, tour, k, predicate, workers).first_improving;
}

std::pair<Tour, SearchStats> local_search(const Instance& instance, const Tour& start, int k,
                                          Predicate predicate, int workers) {
  require_scan_args(instance, start, k);
  Tour tour = start;
  SearchStats stats;
  int cost = tour_cost(instance, tour);
  int zeros = count_zero_paths(instance, tour);
  while (true) {
    ++stats.iterations;
    auto move = find_improving(instance, tour, k, predicate, workers);
    if (!move) break;
    tour = apply_move(tour, *move);
    ++stats.moves_applied;
    const int next_cost = tour_cost(instance, tour);
    const int next_zeros = count_zero_paths(instance, tour);
    if (next_cost != cost - move->gain ||
        !(next_cost < cost || (next_cost == cost && next_zeros < zeros))) {
      throw std::logic_error("local search step did not descend: " + format_move(*move));
    }
    cost = next_cost;
    zeros = next_zeros;
  }
  stats.final_cost = cost;
  stats.final_zero_paths = zeros;
  return {std::move(tour), stats};
}

Tour random_tour(int n, std::uint64_t seed) {
  std::vector<Vertex> order(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(order.begin(), order.end(), 0);
  rng::Engine engine(seed);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng::uniform_below(engine, static_cast<std::uint64_t>(i) + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[j]);
  }
  return Tour(std::move(order));
}

}  // namespace p12tsp
