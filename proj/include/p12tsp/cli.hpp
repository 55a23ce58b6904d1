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

#ifndef P12TSP_CLI_HPP_
#define P12TSP_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "p12tsp/analysis.hpp"
#include "p12tsp/core.hpp"
#include "p12tsp/exact.hpp"

namespace p12tsp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnmet = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (args excludes the program name). Reports go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// An instance named on the command line, with the tours that come with it.
struct ResolvedInstance {
  Instance instance;
  std::optional<Tour> construction;
  std::optional<Tour> reference;
};

// Builtin names: hexa, two_opt_lb_n<N>, three_opt_lb_s<S>, three_opt_pp_lb_s<S>.
// Anything else is read as an instance file.
ResolvedInstance resolve_instance(const std::string& spec);

// construction, reference and identity, or a tour file.
Tour resolve_tour(const std::string& spec, const ResolvedInstance& resolved);

struct SweepConfig {
  int n_min = 6;
  int n_max = 12;
  int instances = 50;  // per (n, p)
  std::vector<double> ps{0.5};
  std::uint64_t seed = 42;
  int workers = 1;
  int limit = kDefaultHeldKarpLimit;
};

struct SweepRun {
  int n = 0;
  double p = 0.0;
  int index = 0;
  bool plus_plus = false;
  bool random_start = false;
  int cost = 0;
  int optimum = 0;
  Rational ratio{1};
  bool certified = false;
  // Empty when every check on this run passed; otherwise the first failure.
  std::string defect;
};

struct SweepSummary {
  int instances = 0;
  std::vector<SweepRun> runs;
  Rational max_ratio_plain{0};
  Rational max_ratio_plus_plus{0};
  int violations = 0;
};

// Throws SizeExceededError when n_max exceeds the exact-solver limit and
// std::invalid_argument for an empty or malformed range.
SweepSummary run_sweep(const SweepConfig& config);

// One `run ...` line per run, in (n, p, index, algorithm, start) order.
std::string format_sweep_runs(const SweepSummary& summary);
std::string format_sweep_summary(const SweepSummary& summary);

}  // namespace p12tsp::cli

#endif  // P12TSP_CLI_HPP_
