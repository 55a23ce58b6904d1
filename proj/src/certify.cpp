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

#include "p12tsp/certify.hpp"

#include <algorithm>
#include <sstream>

namespace p12tsp {
namespace {

Certificate certify(const Instance& instance, const Tour& tour, int k, Predicate predicate,
                    int workers) {
  const NeighborhoodScan scan = scan_neighborhood(instance, tour, k, predicate, workers);
  Certificate cert;
  cert.optimal = !scan.first_improving.has_value();
  cert.witness = scan.first_improving;
  cert.moves_examined = scan.moves_examined;
  cert.predicate = predicate;
  cert.k = k;
  return cert;
}

}  // namespace

Certificate certify_k_optimal(const Instance& instance, const Tour& tour, int k, int workers) {
  return certify(instance, tour, k, Predicate::kPlain, workers);
}

Certificate certify_kpp_optimal(const Instance& instance, const Tour& tour, int k, int workers) {
  return certify(instance, tour, k, Predicate::kPlusPlus, workers);
}

std::string format_certificate(const Certificate& certificate) {
  std::ostringstream out;
  out << "verdict=" << (certificate.optimal ? "optimal" : "non-optimal") << " k=" << certificate.k
      << " predicate=" << to_string(certificate.predicate)
      << " examined=" << certificate.moves_examined << '\n';
  if (certificate.witness) out << format_move(*certificate.witness) << '\n';
  return out.str();
}

KMove Constellation::as_move() const {
  KMove move;
  move.arity = 3;
  move.removed = {canonical(p, u), canonical(q, v), canonical(a, b)};
  move.added = {canonical(p, q), canonical(a, u), canonical(b, v)};
  return move;
}

std::optional<Constellation> find_forbidden_constellation(const Instance& instance,
                                                          const Tour& tour) {
  require_tour_for(instance, tour);
  const int n = tour.size();
  auto cost = [&](Vertex x, Vertex y) { return instance.cost_unchecked(x, y); };

  for (Vertex u = 0; u < n; ++u) {
    const int pu = tour.position(u);
    for (Vertex p : {tour.prev(u), tour.next(u)}) {
      if (cost(p, u) != 2) continue;
      // Walking from u towards p enumerates the arc that holds p.
      const int dir = p == tour.next(u) ? 1 : -1;
      for (Vertex v = 0; v < n; ++v) {
        if (v == u || v == p) continue;
        const int pv = tour.position(v);
        // Arc from u (exclusive) to v (exclusive) in direction `dir`.
        const int arc_len = ((dir == 1 ? pv - pu : pu - pv) + n) % n - 1;
        if (arc_len < 2) continue;
        // q must be v's neighbour on the same arc: the last arc vertex.
        const Vertex q = tour[((pv - dir) % n + n) % n];
        if (cost(q, v) != 2) continue;
        for (int step = 1; step < arc_len; ++step) {
          const Vertex x = tour[((pu + dir * step) % n + n) % n];
          const Vertex y = tour[((pu + dir * (step + 1)) % n + n) % n];
          if (cost(x, u) == 1 && cost(y, v) == 1) return Constellation{p, q, u, v, x, y};
          if (cost(y, u) == 1 && cost(x, v) == 1) return Constellation{p, q, u, v, y, x};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<Vertex, Vertex>> endpoint_pair_violations(const Instance& instance,
                                                                const Tour& tour) {
  const PathDecomposition decomposition = one_path_decomposition(instance, tour);
  std::vector<std::pair<Vertex, int>> endpoints;  // (vertex, path id)
  for (std::size_t id = 0; id < decomposition.paths.size(); ++id) {
    const auto [first, last] = PathDecomposition::endpoints(decomposition.paths[id]);
    endpoints.emplace_back(first, static_cast<int>(id));
    if (last != first) endpoints.emplace_back(last, static_cast<int>(id));
  }
  std::vector<std::pair<Vertex, Vertex>> violations;
  for (std::size_t x = 0; x < endpoints.size(); ++x) {
    for (std::size_t y = x + 1; y < endpoints.size(); ++y) {
      if (endpoints[x].second == endpoints[y].second) continue;
      const Vertex p = endpoints[x].first;
      const Vertex q = endpoints[y].first;
      if (instance.cost_unchecked(p, q) == 1) violations.emplace_back(std::min(p, q), std::max(p, q));
    }
  }
  std::sort(violations.begin(), violations.end());
  return violations;
}

}  // namespace p12tsp
