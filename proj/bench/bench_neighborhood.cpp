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

// Serial versus OpenMP certification of full 3-move neighborhoods.

#include <benchmark/benchmark.h>

#include "p12tsp/certify.hpp"
#include "p12tsp/constructions.hpp"
#include "p12tsp/moves.hpp"

namespace {

void BM_CertifySerial(benchmark::State& state) {
  const auto family = p12tsp::gen_three_opt_lb(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto scan = p12tsp::scan_neighborhood_serial(family.instance, family.tour, 3,
                                                 p12tsp::Predicate::kPlain);
    benchmark::DoNotOptimize(scan.moves_examined);
  }
  state.SetItemsProcessed(state.iterations() *
                          p12tsp::neighborhood_size(family.tour, 3));
}

void BM_CertifyParallel(benchmark::State& state) {
  const auto family = p12tsp::gen_three_opt_lb(static_cast<int>(state.range(0)));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto scan = p12tsp::scan_neighborhood_parallel(family.instance, family.tour, 3,
                                                   p12tsp::Predicate::kPlain, workers);
    benchmark::DoNotOptimize(scan.moves_examined);
  }
  state.SetItemsProcessed(state.iterations() *
                          p12tsp::neighborhood_size(family.tour, 3));
}

void BM_FirstImprovingRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto instance = p12tsp::random_instance(n, 0.3, 1);
  const auto tour = p12tsp::random_tour(n, 2);
  for (auto _ : state) {
    auto move = p12tsp::find_improving(instance, tour, 3, p12tsp::Predicate::kPlusPlus);
    benchmark::DoNotOptimize(move);
  }
}

}  // namespace

BENCHMARK(BM_CertifySerial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyParallel)
    ->Args({12, 1})
    ->Args({12, 2})
    ->Args({12, 4})
    ->Args({16, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_FirstImprovingRandom)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
