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

#include "p12tsp/analysis.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace p12tsp {
namespace {

std::string vtx(std::string_view name, Vertex v) {
  return std::string(name) + "=" + std::to_string(v);
}

struct VertexTally {
  int good = 0;
  int bad = 0;
  int total() const { return good + bad; }
};

std::vector<VertexTally> tally(int n, const CounterLedger& ledger) {
  std::vector<VertexTally> out(static_cast<std::size_t>(n));
  for (const Counter& c : ledger.counters) {
    auto& t = out[static_cast<std::size_t>(c.at)];
    (c.kind == CounterKind::kGood ? t.good : t.bad) += 1;
  }
  return out;
}

}  // namespace

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string_view to_string(CounterKind kind) {
  return kind == CounterKind::kGood ? "good" : "bad";
}

int CounterLedger::good() const {
  return static_cast<int>(std::count_if(counters.begin(), counters.end(), [](const Counter& c) {
    return c.kind == CounterKind::kGood;
  }));
}

int CounterLedger::bad() const { return total() - good(); }

CounterLedger distribute_counters(const Instance& instance, const Tour& tour,
                                  const Tour& optimal) {
  require_tour_for(instance, tour);
  require_tour_for(instance, optimal);
  const EdgeCounts tour_counts = classify_tour_edges(instance, tour);
  CounterLedger ledger{{},
                       tour_counts.h,
                       tour_counts.l,
                       classify_tour_edges(instance, optimal).l,
                       optimal,
                       one_path_decomposition(instance, tour)};

  const auto& paths = ledger.decomposition.paths;
  for (std::size_t id = 0; id < paths.size(); ++id) {
    const auto& path = paths[id];
    const auto [first, last] = PathDecomposition::endpoints(path);
    const bool isolated = path.size() == 1;
    std::vector<Vertex> ends{first};
    if (!isolated) ends.push_back(last);
    for (Vertex v : ends) {
      for (Vertex w : {optimal.prev(v), optimal.next(v)}) {
        if (instance.cost_unchecked(v, w) != 1) continue;
        const Counter c{isolated ? CounterKind::kGood : CounterKind::kBad, w,
                        static_cast<int>(id), v, canonical(v, w)};
        ledger.counters.push_back(c);
        if (isolated) ledger.counters.push_back(c);
      }
    }
  }
  return ledger;
}

bool CounterPropertyReport::all_pass() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.pass; });
}

CounterPropertyReport check_counter_properties(const Instance& instance, const Tour& tour,
                                               const CounterLedger& ledger) {
  require_tour_for(instance, tour);
  const int n = tour.size();
  const auto at = tally(n, ledger);
  auto tally_of = [&](Vertex v) -> const VertexTally& { return at[static_cast<std::size_t>(v)]; };
  CounterPropertyReport report;
  auto fail = [&](int property, std::string witness) {
    auto& slot = report.properties[static_cast<std::size_t>(property - 1)];
    if (!slot.pass) return;
    slot.pass = false;
    slot.witness = std::move(witness);
  };

  // 1. Slots keyed by via_edge.
  {
    std::map<std::pair<Vertex, Edge>, VertexTally> slots;
    for (const Counter& c : ledger.counters) {
      auto& t = slots[{c.at, c.via_edge}];
      (c.kind == CounterKind::kGood ? t.good : t.bad) += 1;
    }
    std::map<Vertex, int> groups;
    for (const auto& [key, t] : slots) {
      const bool shaped = (t.good == 2 && t.bad == 0) || (t.good == 0 && t.bad == 1);
      if (!shaped) fail(1, vtx("v", key.first) + " slot=" + to_string(key.second));
      if (++groups[key.first] > 2) fail(1, vtx("v", key.first) + " slots>2");
    }
  }

  // 2. Spacing of good-counter vertices along the tour.
  for (int p = 0; p < n; ++p) {
    const Vertex a = tour[p];
    if (tally_of(a).good == 0) continue;
    const Vertex b = tour[(p + 1) % n];
    const Vertex c = tour[(p + 2) % n];
    if (tally_of(b).good > 0) fail(2, vtx("a", a) + " " + vtx("c", b));
    if (c != a && tally_of(c).good > 0 && tally_of(b).total() > 0) {
      fail(2, vtx("a", a) + " " + vtx("b", b) + " " + vtx("c", c));
    }
  }

  // 3 and 4. Endpoints.
  int long_paths = 0;
  for (const auto& path : ledger.decomposition.paths) {
    const auto [first, last] = PathDecomposition::endpoints(path);
    if (path.size() == 1) {
      if (tally_of(first).total() > 0) fail(3, vtx("v", first));
      continue;
    }
    ++long_paths;
    for (Vertex p : {first, last}) {
      const VertexTally& t = tally_of(p);
      if (t.good > 0 || t.bad > 1) fail(3, vtx("v", p));
      if (t.total() == 0) continue;
      for (Vertex w : {tour.prev(p), tour.next(p)}) {
        if (instance.cost_unchecked(p, w) == 1 && tally_of(w).good > 0) {
          fail(4, vtx("p", p) + " " + vtx("w", w));
        }
      }
    }
  }

  // 5. Bad-counter budget.
  const int bad = ledger.bad();
  if (bad > 4 * long_paths) {
    fail(5, "bad=" + std::to_string(bad) + " bound=" + std::to_string(4 * long_paths));
  }
  return report;
}

bool count_bound_check(const CounterLedger& ledger) {
  return 5LL * ledger.total() <= 12LL * ledger.h;
}

std::string ledger_defect(const Instance& instance, const CounterLedger& ledger) {
  const auto& paths = ledger.decomposition.paths;
  std::map<std::tuple<int, Edge, Vertex, CounterKind>, int> keys;
  for (const Counter& c : ledger.counters) {
    const std::string where = "counter at " + std::to_string(c.at) + " via " + to_string(c.via_edge);
    if (c.source_path < 0 || c.source_path >= static_cast<int>(paths.size())) {
      return where + ": source path out of range";
    }
    const auto& path = paths[static_cast<std::size_t>(c.source_path)];
    const auto [first, last] = PathDecomposition::endpoints(path);
    if (c.source != first && c.source != last) return where + ": source is not a path endpoint";
    if (c.via_edge != canonical(c.source, c.at)) return where + ": via edge does not join source and at";
    if (c.source == c.at) return where + ": self edge";
    if (instance.cost(c.source, c.at) != 1) return where + ": via edge has cost 2";
    if (!ledger.optimal.has_edge(c.source, c.at)) return where + ": via edge is not on the optimal tour";
    const bool isolated = path.size() == 1;
    if (isolated != (c.kind == CounterKind::kGood)) return where + ": kind does not match path length";
    ++keys[{c.source_path, c.via_edge, c.at, c.kind}];
  }
  for (const auto& [key, count] : keys) {
    const int expected = std::get<3>(key) == CounterKind::kGood ? 2 : 1;
    if (count != expected) {
      return "path " + std::to_string(std::get<0>(key)) + " via " + to_string(std::get<1>(key)) +
             " at " + std::to_string(std::get<2>(key)) +
             ": " + std::to_string(count) + " counters, expected " + std::to_string(expected);
    }
  }
  return {};
}

GbPair gb_values(int i) {
  if (i < 0) throw std::invalid_argument("gb_values needs i >= 0, got " + std::to_string(i));
  if (i == 0) return {0, 0, 0};
  switch (i % 3) {
    case 0:
      return {i, 4 * i / 3, 4 * i / 3 - 2};
    case 1:
      return {i, 4 * (i - 1) / 3, 4 * (i - 1) / 3 + 2};
    default:
      return {i, 4 * (i + 1) / 3, 4 * (i - 2) / 3};
  }
}

DualCheck dual_feasibility_check(int max_i) {
  if (max_i < 1) throw std::invalid_argument("dual_feasibility_check needs max_i >= 1");
  // y = (12/5, 4/5, 1/5) scaled by 15: (36, 12, 3); y2 + y3 = 15 = 1 * 15.
  constexpr std::int64_t y1 = 36, y2 = 12, y3 = 3;
  static_assert(y2 + y3 == 15 && y2 >= 0 && y3 >= 0);
  DualCheck check;
  check.feasible = true;
  std::array<bool, 3> seen{};
  for (int i = 1; i <= max_i; ++i) {
    const GbPair gb = gb_values(i);
    const std::int64_t slack = y1 * i - y2 * gb.b - 4 * y3 - 15LL * gb.g;
    const auto r = static_cast<std::size_t>(i % 3);
    if (!seen[r]) {
      check.min_slack[r] = check.max_slack[r] = slack;
      seen[r] = true;
    } else {
      check.min_slack[r] = std::min(check.min_slack[r], slack);
      check.max_slack[r] = std::max(check.max_slack[r], slack);
    }
    if (slack < 0 && check.feasible) {
      check.feasible = false;
      check.first_violation = i;
    }
  }
  return check;
}

Rational ratio_upper_bound(const Rational& d) {
  if (d < 0) throw std::invalid_argument("ratio_upper_bound needs d >= 0");
  return Rational(1) + d / (Rational(4) + d);
}

PpPathReport pp_path_checks(const Instance& instance, const Tour& tour,
                            const CounterLedger& ledger) {
  require_tour_for(instance, tour);
  const auto& decomposition = ledger.decomposition;
  PpPathReport report;
  if (decomposition.whole_cycle) {
    if (!ledger.counters.empty()) {
      report.pass = false;
      report.witness = "counters on a tour without cost-2 edges";
    }
    return report;
  }
  std::vector<VertexTally> per_path(decomposition.paths.size());
  for (const Counter& c : ledger.counters) {
    const int id = decomposition.path_of[static_cast<std::size_t>(c.at)];
    auto& t = per_path[static_cast<std::size_t>(id)];
    (c.kind == CounterKind::kGood ? t.good : t.bad) += 1;
  }
  for (std::size_t id = 0; id < per_path.size(); ++id) {
    const int x = PathDecomposition::edge_count(decomposition.paths[id]);
    const VertexTally& t = per_path[id];
    const std::string where = "path=" + std::to_string(id) + " edges=" + std::to_string(x);
    if (t.good > 0 && x != 2) {
      report.pass = false;
      report.witness = where + " good=" + std::to_string(t.good);
      return report;
    }
    if (t.total() > 2 * x) {
      report.pass = false;
      report.witness = where + " counters=" + std::to_string(t.total());
      return report;
    }
  }
  return report;
}

RatioReport ratio_report(const Instance& instance, const Tour& tour, const Tour& reference) {
  require_tour_for(instance, tour);
  require_tour_for(instance, reference);
  const EdgeCounts t = classify_tour_edges(instance, tour);
  const EdgeCounts r = classify_tour_edges(instance, reference);
  RatioReport report;
  report.h = t.h;
  report.l = t.l;
  report.f = r.l;
  report.cost_tour = t.h + 2 * t.l;
  report.cost_reference = r.h + 2 * r.l;
  report.ratio = Rational(report.cost_tour, report.cost_reference);
  report.bound_three_opt = ratio_upper_bound(Rational(12, 5));
  report.bound_plus_plus = ratio_upper_bound(Rational(2));
  return report;
}

}  // namespace p12tsp
