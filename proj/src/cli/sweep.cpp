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

#include <algorithm>
#include <array>
#include <random>
#include <sstream>
#include <string>

#include "p12tsp/analysis.hpp"
#include "p12tsp/certify.hpp"
#include "p12tsp/cli.hpp"
#include "p12tsp/constructions.hpp"
#include "p12tsp/exact.hpp"
#include "p12tsp/moves.hpp"

namespace p12tsp::cli {
namespace {

struct Job {
  int n;
  std::size_t p_index;
  int index;
};

struct Seeds {
  std::uint64_t instance;
  std::uint64_t start;
};

Seeds derive_seeds(std::uint64_t seed, const Job& job) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(job.n), static_cast<std::uint32_t>(job.p_index),
                    static_cast<std::uint32_t>(job.index)};
  std::array<std::uint32_t, 4> words{};
  seq.generate(words.begin(), words.end());
  return {(std::uint64_t{words[0]} << 32) | words[1], (std::uint64_t{words[2]} << 32) | words[3]};
}

// Checks every counter-machinery property a 3-optimal tour has to satisfy.
std::string three_opt_defect(const Instance& instance, const Tour& tour,
                             const CounterLedger& ledger) {
  if (auto defect = ledger_defect(instance, ledger); !defect.empty()) return "ledger: " + defect;
  const CounterPropertyReport props = check_counter_properties(instance, tour, ledger);
  for (std::size_t i = 0; i < props.properties.size(); ++i) {
    if (!props.properties[i].pass) {
      return "prop" + std::to_string(i + 1) + ": " + props.properties[i].witness;
    }
  }
  if (!count_bound_check(ledger)) {
    return "count bound: 5*" + std::to_string(ledger.total()) + " > 12*" + std::to_string(ledger.h);
  }
  if (const auto pairs = endpoint_pair_violations(instance, tour); !pairs.empty()) {
    return "endpoint pair (" + std::to_string(pairs.front().first) + "," +
           std::to_string(pairs.front().second) + ")";
  }
  if (find_forbidden_constellation(instance, tour)) return "forbidden constellation present";
  return {};
}

std::vector<SweepRun> run_job(const SweepConfig& config, const Job& job) {
  const double p = config.ps[job.p_index];
  const Seeds seeds = derive_seeds(config.seed, job);
  const Instance instance = random_instance(job.n, p, seeds.instance);
  const ExactResult exact = held_karp(instance, config.limit);
  const std::array<Tour, 2> starts = {Tour::identity(job.n), random_tour(job.n, seeds.start)};
  const Rational plain_bound = ratio_upper_bound(Rational(12, 5));
  const Rational pp_bound = ratio_upper_bound(Rational(2));

  std::vector<SweepRun> runs;
  for (bool plus_plus : {false, true}) {
    const Predicate predicate = plus_plus ? Predicate::kPlusPlus : Predicate::kPlain;
    for (std::size_t s = 0; s < starts.size(); ++s) {
      SweepRun run;
      run.n = job.n;
      run.p = p;
      run.index = job.index;
      run.plus_plus = plus_plus;
      run.random_start = s == 1;
      const Tour tour = local_search(instance, starts[s], 3, predicate).first;
      run.cost = tour_cost(instance, tour);
      run.optimum = exact.cost;
      run.ratio = Rational(run.cost, run.optimum);

      const bool plain_ok = certify_k_optimal(instance, tour, 3).optimal;
      const bool pp_ok = !plus_plus || certify_kpp_optimal(instance, tour, 3).optimal;
      run.certified = plain_ok && pp_ok;
      if (!run.certified) {
        run.defect = "not certified";
        runs.push_back(std::move(run));
        continue;
      }
      if (run.ratio > (plus_plus ? pp_bound : plain_bound)) {
        run.defect = "ratio " + to_string(run.ratio) + " above bound";
      }
      const CounterLedger ledger = distribute_counters(instance, tour, exact.tour);
      if (run.defect.empty()) run.defect = three_opt_defect(instance, tour, ledger);
      if (run.defect.empty() && plus_plus) {
        const PpPathReport pp = pp_path_checks(instance, tour, ledger);
        if (!pp.pass) {
          run.defect = "pp paths: " + pp.witness;
        } else if (5LL * ledger.total() > 10LL * ledger.h) {
          run.defect = "pp count bound: 5*" + std::to_string(ledger.total()) + " > 10*" +
                       std::to_string(ledger.h);
        }
      }
      runs.push_back(std::move(run));
    }
  }
  return runs;
}

std::string format_p(double p) {
  std::ostringstream out;
  out << p;
  return out.str();
}

}  // namespace

SweepSummary run_sweep(const SweepConfig& config) {
  if (config.n_min < 5 || config.n_min > config.n_max) {
    throw std::invalid_argument("sweep needs 5 <= n-min <= n-max");
  }
  if (config.instances < 1) throw std::invalid_argument("sweep needs --instances >= 1");
  if (config.ps.empty()) throw std::invalid_argument("sweep needs at least one --p");
  if (config.n_max > config.limit) {
    throw SizeExceededError("sweep n-max=" + std::to_string(config.n_max) +
                            " exceeds the exact-solver limit " + std::to_string(config.limit));
  }
  for (double p : config.ps) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("--p must lie in [0, 1]");
  }

  std::vector<Job> jobs;
  for (int n = config.n_min; n <= config.n_max; ++n) {
    for (std::size_t pi = 0; pi < config.ps.size(); ++pi) {
      for (int idx = 0; idx < config.instances; ++idx) jobs.push_back(Job{n, pi, idx});
    }
  }
  std::vector<std::vector<SweepRun>> results(jobs.size());
  const int workers = std::max(1, config.workers);
  const auto count = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (std::int64_t j = 0; j < count; ++j) {
    results[static_cast<std::size_t>(j)] = run_job(config, jobs[static_cast<std::size_t>(j)]);
  }

  SweepSummary summary;
  summary.instances = static_cast<int>(jobs.size());
  for (auto& runs : results) {
    for (auto& run : runs) {
      Rational& best = run.plus_plus ? summary.max_ratio_plus_plus : summary.max_ratio_plain;
      if (run.ratio > best) best = run.ratio;
      if (!run.defect.empty()) ++summary.violations;
      summary.runs.push_back(std::move(run));
    }
  }
  return summary;
}

std::string format_sweep_runs(const SweepSummary& summary) {
  std::ostringstream out;
  for (const SweepRun& run : summary.runs) {
    out << "run n=" << run.n << " p=" << format_p(run.p) << " index=" << run.index
        << " algorithm=" << (run.plus_plus ? "3opt++" : "3opt")
        << " start=" << (run.random_start ? "random" : "identity") << " cost=" << run.cost
        << " optimum=" << run.optimum << " ratio=" << to_string(run.ratio)
        << " certified=" << (run.certified ? "yes" : "no")
        << " checks=" << (run.defect.empty() ? "pass" : "fail");
    if (!run.defect.empty()) out << " defect=\"" << run.defect << '"';
    out << '\n';
  }
  return out.str();
}

std::string format_sweep_summary(const SweepSummary& summary) {
  std::ostringstream out;
  out << "instances=" << summary.instances << '\n'
      << "runs=" << summary.runs.size() << '\n'
      << "max_ratio_3opt=" << to_string(summary.max_ratio_plain) << '\n'
      << "bound_3opt=" << to_string(ratio_upper_bound(Rational(12, 5))) << '\n'
      << "max_ratio_3opt_pp=" << to_string(summary.max_ratio_plus_plus) << '\n'
      << "bound_3opt_pp=" << to_string(ratio_upper_bound(Rational(2))) << '\n'
      << "violations=" << summary.violations << '\n';
  return out.str();
}

}  // namespace p12tsp::cli
