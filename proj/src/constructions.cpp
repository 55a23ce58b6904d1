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

#include "p12tsp/constructions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rng.hpp"

namespace p12tsp {
namespace {

// Index arithmetic modulo n.
struct Ring {
  int n;
  Vertex operator()(long long i) const { return static_cast<Vertex>(((i % n) + n) % n); }
};

std::vector<Edge> dedup(std::vector<Edge> edges) {
  for (Edge& e : edges) e = canonical(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

FamilyOutput checked(FamilyOutput out, const char* family) {
  if (tour_cost(out.instance, out.tour) != out.claimed_tour_cost) {
    throw std::logic_error(std::string(family) + ": construction tour cost mismatch");
  }
  if (tour_cost(out.instance, out.reference_tour) > out.claimed_reference_bound) {
    throw std::logic_error(std::string(family) + ": reference tour exceeds its bound");
  }
  return out;
}

// Cost-1 edges of the 8-vertex-segment family, 13 templates per segment.
std::vector<Edge> three_opt_edges(int s) {
  const Ring at{8 * s};
  std::vector<Edge> edges;
  for (long long h = 0; h < s; ++h) {
    const long long b = 8 * h;
    const std::array<std::pair<long long, long long>, 13> templates = {{
        {b, b + 1},
        {b + 1, b + 2},
        {b + 2, b + 3},
        {b + 3, b + 4},
        {b + 4, b + 5},
        {b + 2, b + 5},
        {b + 2, b + 8 + 5},
        {b + 3, b},
        {b + 3, b - 8},
        {b + 4, b + 6},
        {b + 4, b + 8 + 6},
        {b + 7, b + 8 + 1},
        {b + 7, b + 16 + 1},
    }};
    for (auto [x, y] : templates) edges.push_back(Edge{at(x), at(y)});
  }
  return dedup(std::move(edges));
}

// The four cost-1 cycles covering all vertices, in listed order.
std::array<std::vector<Edge>, 4> three_opt_cycles(int s) {
  const Ring at{8 * s};
  std::array<std::vector<Edge>, 4> cycles;
  for (long long h = 0; h < s; ++h) {
    const long long b = 8 * h;
    cycles[0].push_back(Edge{at(b + 2), at(b + 5)});
    cycles[0].push_back(Edge{at(b + 2), at(b + 8 + 5)});
    cycles[1].push_back(Edge{at(b + 3), at(b)});
    cycles[1].push_back(Edge{at(b + 3), at(b - 8)});
    cycles[2].push_back(Edge{at(b + 4), at(b + 6)});
    cycles[2].push_back(Edge{at(b + 4), at(b + 8 + 6)});
    cycles[3].push_back(Edge{at(b + 7), at(b + 8 + 1)});
    cycles[3].push_back(Edge{at(b + 7), at(b + 16 + 1)});
  }
  for (auto& c : cycles) c = dedup(std::move(c));
  return cycles;
}

// Opens a cycle by dropping its least edge {a, b}; returns the path a .. b.
std::vector<Vertex> open_cycle(const std::vector<Edge>& cycle, int n) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (Edge e : cycle) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  const Edge dropped = cycle.front();
  std::vector<Vertex> path{dropped.u};
  Vertex before = dropped.v;
  Vertex current = dropped.u;
  while (true) {
    const auto& nbrs = adj[static_cast<std::size_t>(current)];
    if (nbrs.size() != 2) throw std::logic_error("cost-1 template set is not a union of cycles");
    const Vertex following = nbrs[0] == before ? nbrs[1] : nbrs[0];
    if (following == dropped.v && current != dropped.u) {
      path.push_back(following);
      break;
    }
    before = current;
    current = following;
    path.push_back(current);
    if (static_cast<int>(path.size()) > n) throw std::logic_error("cycle walk did not close");
  }
  if (path.size() != cycle.size()) throw std::logic_error("cycle walk length mismatch");
  return path;
}

int family_minimum(Family family) {
  switch (family) {
    case Family::kTwoOptLb:
      return 7;
    case Family::kThreeOptLb:
      return 3;
    case Family::kThreeOptPpLb:
      return 2;
  }
  return 0;
}

Instance family_instance(Family family, int parameter) {
  switch (family) {
    case Family::kTwoOptLb:
      return gen_two_opt_lb(parameter).instance;
    case Family::kThreeOptLb:
      return gen_three_opt_lb(parameter).instance;
    case Family::kThreeOptPpLb:
      return gen_three_opt_pp_lb(parameter).instance;
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kTwoOptLb:
      return "two-opt-lb";
    case Family::kThreeOptLb:
      return "three-opt-lb";
    case Family::kThreeOptPpLb:
      return "three-opt-pp-lb";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kTwoOptLb, Family::kThreeOptLb, Family::kThreeOptPpLb}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

int base_segment_length(Family family) {
  switch (family) {
    case Family::kTwoOptLb:
      return 1;
    case Family::kThreeOptLb:
      return 8;
    case Family::kThreeOptPpLb:
      return 6;
  }
  return 1;
}

FamilyOutput gen_two_opt_lb(int n) {
  if (n < 7) throw std::invalid_argument("two-opt-lb needs n >= 7, got " + std::to_string(n));
  // Label v_i (1-based) is vertex i - 1.
  std::vector<Edge> edges;
  for (int i = 1; i + 2 <= n; i += 2) edges.push_back(Edge{i - 1, i + 1});
  for (int i = 1; i + 1 <= n; ++i) edges.push_back(Edge{i - 1, i});
  edges.push_back(Edge{n - 1, 0});

  std::vector<Vertex> order;
  for (int i = 1; i <= n; i += 2) order.push_back(i - 1);
  for (int i = (n % 2 == 0 ? n : n - 1); i >= 2; i -= 2) order.push_back(i - 1);

  FamilyOutput out{Instance(n, dedup(std::move(edges))), Tour(std::move(order)), Tour::identity(n),
                   n + (n - 2) / 2, n};
  return checked(std::move(out), "two-opt-lb");
}

FamilyOutput gen_three_opt_lb(int s) {
  if (s < 3) throw std::invalid_argument("three-opt-lb needs s >= 3, got " + std::to_string(s));
  const int n = 8 * s;
  FamilyOutput out{Instance(n, three_opt_edges(s)), Tour::identity(n), build_three_opt_reference(s),
                   11 * s, 8 * s + 4};
  return checked(std::move(out), "three-opt-lb");
}

Tour build_three_opt_reference(int s) {
  if (s < 3) throw std::invalid_argument("three-opt-lb needs s >= 3, got " + std::to_string(s));
  const int n = 8 * s;
  std::vector<Vertex> order;
  order.reserve(static_cast<std::size_t>(n));
  for (const auto& cycle : three_opt_cycles(s)) {
    const auto path = open_cycle(cycle, n);
    order.insert(order.end(), path.begin(), path.end());
  }
  return Tour(std::move(order));
}

FamilyOutput gen_three_opt_pp_lb(int s) {
  if (s < 2) throw std::invalid_argument("three-opt-pp-lb needs s >= 2, got " + std::to_string(s));
  const int n = 6 * s;
  const Ring at{n};
  std::vector<Edge> edges;
  for (long long h = 0; h < s; ++h) {
    const long long b = 6 * h;
    const std::array<std::pair<long long, long long>, 7> templates = {{
        {b, b + 1},
        {b + 2, b + 3},
        {b + 3, b + 4},
        {b + 4, b + 5},
        {b, b + 3},
        {b + 2, b + 5},
        {b + 4, b + 6 + 1},
    }};
    for (auto [x, y] : templates) edges.push_back(Edge{at(x), at(y)});
  }
  // Reference: edges {2h+1, 2h} and {2h, 2h+3}, i.e. 1, 0, 3, 2, 5, 4, ...
  std::vector<Vertex> reference;
  for (int h = 0; 2 * h < n; ++h) {
    reference.push_back(2 * h + 1);
    reference.push_back(2 * h);
  }
  FamilyOutput out{Instance(n, dedup(std::move(edges))), Tour::identity(n), Tour(std::move(reference)),
                   8 * s, 6 * s};
  return checked(std::move(out), "three-opt-pp-lb");
}

RegularityReport is_regular(Family family, int s_check, int segment_length) {
  if (family == Family::kTwoOptLb) {
    throw std::invalid_argument("two-opt-lb is not a segment-periodic family");
  }
  if (s_check < 3) throw std::invalid_argument("regularity check needs s_check >= 3");
  if (segment_length < 1) throw std::invalid_argument("segment length must be positive");
  const int n = segment_length * s_check;
  const int base = base_segment_length(family);
  if (n % base != 0 || n / base < family_minimum(family)) {
    throw std::invalid_argument("segment length " + std::to_string(segment_length) +
                                " does not divide the vertex count of any " +
                                std::string(to_string(family)) + " member");
  }
  const Instance instance = family_instance(family, n / base);
  const Ring at{n};
  const int l = segment_length;

  RegularityReport report;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (instance.cost_unchecked(i, j) != instance.cost_unchecked(at(i + l), at(j + l))) {
        report.violation = Edge{i, j};
        report.violated_condition = 2;
        return report;
      }
    }
  }
  // Segment distance on the ring of s_check segments.
  for (const Edge& e : instance.cost1()) {
    const int si = e.u / l;
    const int sj = e.v / l;
    const int gap = std::min((si - sj + s_check) % s_check, (sj - si + s_check) % s_check);
    if (gap > 1) {
      report.violation = e;
      report.violated_condition = 3;
      return report;
    }
  }
  report.regular = true;
  return report;
}

Instance random_instance(int n, double p, std::uint64_t seed) {
  if (n < 5) throw std::invalid_argument("random instances need n >= 5");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  rng::Engine engine(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng::uniform_unit(engine) < p) edges.push_back(Edge{u, v});
    }
  }
  return Instance(n, std::move(edges));
}

}  // namespace p12tsp
