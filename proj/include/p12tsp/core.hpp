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

#ifndef P12TSP_CORE_HPP_
#define P12TSP_CORE_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace p12tsp {

using Vertex = std::int32_t;

// Unordered vertex pair. Stored canonically with u < v wherever it is
// used as a set element.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge canonical(Vertex a, Vertex b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

constexpr bool same_edge(Edge x, Edge y) noexcept {
  return canonical(x.u, x.v) == canonical(y.u, y.v);
}

std::string to_string(Edge e);

// A complete graph on n vertices whose edges all cost 2 except an explicit
// set of cost-1 edges.
class Instance {
 public:
  static constexpr int kMinVertices = 3;

  // Throws std::invalid_argument on n < 3, self-loops, out-of-range
  // endpoints or duplicate pairs.
  Instance(int n, std::vector<Edge> cost1_edges);

  int size() const noexcept { return n_; }

  // Sorted canonical cost-1 pairs.
  const std::vector<Edge>& cost1() const noexcept { return cost1_; }

  // Checked lookup: throws std::invalid_argument if u == v or either vertex
  // is out of range.
  int cost(Vertex u, Vertex v) const;

  // Hot-path lookup for callers that already know u != v and both are in
  // range.
  int cost_unchecked(Vertex u, Vertex v) const noexcept {
    if (!dense_.empty()) {
      return dense_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(v)];
    }
    return sparse_cost(u, v);
  }

  // Number of cost-1 edges incident to v.
  int cost1_degree(Vertex v) const;

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.n_ == b.n_ && a.cost1_ == b.cost1_;
  }

 private:
  int sparse_cost(Vertex u, Vertex v) const noexcept;

  int n_;
  std::vector<Edge> cost1_;
  // Row-major n x n cost table, present for n <= kDenseLimit.
  std::vector<std::uint8_t> dense_;

  static constexpr int kDenseLimit = 4096;
};

// Free-function form of Instance::cost.
inline int cost_edge(const Instance& instance, Vertex u, Vertex v) {
  return instance.cost(u, v);
}

enum class TourDefect {
  kNone,
  kWrongLength,
  kVertexOutOfRange,
  kDuplicateVertex,
  kMissingVertex,
};

std::string_view to_string(TourDefect defect);

// Checks that `order` is a permutation of [0, n). When the length is right
// but the multiset is wrong, the smallest vertex id whose multiplicity is
// not one decides between kDuplicateVertex and kMissingVertex.
TourDefect validate_tour(int n, std::span<const Vertex> order);

class ValidationError : public std::invalid_argument {
 public:
  ValidationError(TourDefect defect, const std::string& what)
      : std::invalid_argument(what), defect_(defect) {}
  TourDefect defect() const noexcept { return defect_; }

 private:
  TourDefect defect_;
};

// Cyclic permutation of the vertices [0, n).
class Tour {
 public:
  // Throws ValidationError unless `order` is a permutation of
  // [0, order.size()) with at least three entries.
  explicit Tour(std::vector<Vertex> order);

  static Tour identity(int n);

  int size() const noexcept { return static_cast<int>(order_.size()); }
  std::span<const Vertex> order() const noexcept { return order_; }
  Vertex operator[](int pos) const noexcept { return order_[static_cast<std::size_t>(pos)]; }
  int position(Vertex v) const noexcept { return pos_[static_cast<std::size_t>(v)]; }

  Vertex next(Vertex v) const noexcept {
    const int p = position(v) + 1;
    return order_[static_cast<std::size_t>(p == size() ? 0 : p)];
  }
  Vertex prev(Vertex v) const noexcept {
    const int p = position(v);
    return order_[static_cast<std::size_t>(p == 0 ? size() - 1 : p - 1)];
  }

  bool has_edge(Vertex a, Vertex b) const noexcept {
    return next(a) == b || prev(a) == b;
  }

  // The n tour edges in canonical form, sorted.
  std::vector<Edge> edge_set() const;

  friend bool operator==(const Tour& a, const Tour& b) { return a.order_ == b.order_; }

 private:
  std::vector<Vertex> order_;
  std::vector<int> pos_;
};

// Throws ValidationError(kWrongLength) if the tour does not cover exactly
// the instance's vertices.
void require_tour_for(const Instance& instance, const Tour& tour);

// Counts of cost-1 (h) and cost-2 (l) tour edges.
struct EdgeCounts {
  int h = 0;
  int l = 0;
};

EdgeCounts classify_tour_edges(const Instance& instance, const Tour& tour);

// Sum of the n cyclic edge costs; equals h + 2l.
int tour_cost(const Instance& instance, const Tour& tour);

// Maximal cost-1 segments of a tour.
struct PathDecomposition {
  // Each path lists its vertices in tour order. Paths are sorted by the tour
  // position of their first vertex. A single vertex is a path with no edges.
  std::vector<std::vector<Vertex>> paths;
  // Set iff the tour has no cost-2 edge; `paths` is then empty.
  bool whole_cycle = false;
  // Vertex -> index into `paths`, or -1 when whole_cycle.
  std::vector<int> path_of;

  std::size_t count() const noexcept { return paths.size(); }
  static int edge_count(const std::vector<Vertex>& path) {
    return static_cast<int>(path.size()) - 1;
  }
  // Endpoints of a path: its first and last vertex (identical for a path
  // of length 0).
  static std::pair<Vertex, Vertex> endpoints(const std::vector<Vertex>& path) {
    return {path.front(), path.back()};
  }
};

PathDecomposition one_path_decomposition(const Instance& instance, const Tour& tour);

}  // namespace p12tsp

#endif  // P12TSP_CORE_HPP_
