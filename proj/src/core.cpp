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

#include "p12tsp/core.hpp"

#include <algorithm>
#include <numeric>

namespace p12tsp {

std::string to_string(Edge e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Instance::Instance(int n, std::vector<Edge> cost1_edges) : n_(n) {
  if (n < kMinVertices) {
    throw std::invalid_argument("instance needs at least 3 vertices, got " + std::to_string(n));
  }
  for (Edge& e : cost1_edges) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge " + to_string(e) + " out of range for n=" +
                                  std::to_string(n));
    }
    e = canonical(e.u, e.v);
  }
  std::sort(cost1_edges.begin(), cost1_edges.end());
  if (auto dup = std::adjacent_find(cost1_edges.begin(), cost1_edges.end());
      dup != cost1_edges.end()) {
    throw std::invalid_argument("duplicate cost-1 edge " + to_string(*dup));
  }
  cost1_ = std::move(cost1_edges);

  if (n_ <= kDenseLimit) {
    const auto un = static_cast<std::size_t>(n_);
    dense_.assign(un * un, 2);
    for (const Edge& e : cost1_) {
      dense_[static_cast<std::size_t>(e.u) * un + static_cast<std::size_t>(e.v)] = 1;
      dense_[static_cast<std::size_t>(e.v) * un + static_cast<std::size_t>(e.u)] = 1;
    }
  }
}

int Instance::cost(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("vertex out of range in cost(" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  }
  if (u == v) {
    throw std::invalid_argument("cost of a self-loop is undefined");
  }
  return cost_unchecked(u, v);
}

int Instance::sparse_cost(Vertex u, Vertex v) const noexcept {
  return std::binary_search(cost1_.begin(), cost1_.end(), canonical(u, v)) ? 1 : 2;
}

int Instance::cost1_degree(Vertex v) const {
  return static_cast<int>(std::count_if(cost1_.begin(), cost1_.end(),
                                        [v](Edge e) { return e.u == v || e.v == v; }));
}

std::string_view to_string(TourDefect defect) {
  switch (defect) {
    case TourDefect::kNone:
      return "ok";
    case TourDefect::kWrongLength:
      return "wrong-length";
    case TourDefect::kVertexOutOfRange:
      return "vertex-out-of-range";
    case TourDefect::kDuplicateVertex:
      return "duplicate-vertex";
    case TourDefect::kMissingVertex:
      return "missing-vertex";
  }
  return "unknown";
}

TourDefect validate_tour(int n, std::span<const Vertex> order) {
  if (n < 0 || order.size() != static_cast<std::size_t>(n)) {
    return TourDefect::kWrongLength;
  }
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n) return TourDefect::kVertexOutOfRange;
    ++seen[static_cast<std::size_t>(v)];
  }
  for (int count : seen) {
    if (count == 0) return TourDefect::kMissingVertex;
    if (count > 1) return TourDefect::kDuplicateVertex;
  }
  return TourDefect::kNone;
}

Tour::Tour(std::vector<Vertex> order) : order_(std::move(order)) {
  const int n = static_cast<int>(order_.size());
  if (n < Instance::kMinVertices) {
    throw ValidationError(TourDefect::kWrongLength, "a tour needs at least 3 vertices");
  }
  if (const TourDefect d = validate_tour(n, order_); d != TourDefect::kNone) {
    throw ValidationError(d, "invalid tour: " + std::string(to_string(d)));
  }
  pos_.assign(order_.size(), 0);
  for (int i = 0; i < n; ++i) pos_[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
}

Tour Tour::identity(int n) {
  std::vector<Vertex> order(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(order.begin(), order.end(), 0);
  return Tour(std::move(order));
}

std::vector<Edge> Tour::edge_set() const {
  std::vector<Edge> edges;
  edges.reserve(order_.size());
  for (int i = 0; i < size(); ++i) {
    edges.push_back(canonical((*this)[i], (*this)[(i + 1) % size()]));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

void require_tour_for(const Instance& instance, const Tour& tour) {
  if (tour.size() != instance.size()) {
    throw ValidationError(TourDefect::kWrongLength,
                          "tour has " + std::to_string(tour.size()) + " vertices, instance has " +
                              std::to_string(instance.size()));
  }
}

EdgeCounts classify_tour_edges(const Instance& instance, const Tour& tour) {
  require_tour_for(instance, tour);
  EdgeCounts counts;
  const int n = tour.size();
  for (int i = 0; i < n; ++i) {
    if (instance.cost_unchecked(tour[i], tour[(i + 1) % n]) == 1) {
      ++counts.h;
    } else {
      ++counts.l;
    }
  }
  return counts;
}

int tour_cost(const Instance& instance, const Tour& tour) {
  const EdgeCounts counts = classify_tour_edges(instance, tour);
  return counts.h + 2 * counts.l;
}

PathDecomposition one_path_decomposition(const Instance& instance, const Tour& tour) {
  require_tour_for(instance, tour);
  const int n = tour.size();
  PathDecomposition result;
  result.path_of.assign(static_cast<std::size_t>(n), -1);

  auto edge_cost = [&](int pos) { return instance.cost_unchecked(tour[pos], tour[(pos + 1) % n]); };

  // A path starts at position i whenever the tour edge entering i costs 2.
  for (int i = 0; i < n; ++i) {
    if (edge_cost((i + n - 1) % n) != 2) continue;
    std::vector<Vertex> path{tour[i]};
    for (int p = i; edge_cost(p) == 1; p = (p + 1) % n) {
      path.push_back(tour[(p + 1) % n]);
    }
    const int id = static_cast<int>(result.paths.size());
    for (Vertex v : path) result.path_of[static_cast<std::size_t>(v)] = id;
    result.paths.push_back(std::move(path));
  }
  result.whole_cycle = result.paths.empty();
  return result;
}

}  // namespace p12tsp
