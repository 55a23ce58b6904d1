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

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "p12tsp/analysis.hpp"
#include "p12tsp/certify.hpp"
#include "p12tsp/cli.hpp"
#include "p12tsp/constructions.hpp"
#include "p12tsp/exact.hpp"
#include "p12tsp/io.hpp"
#include "p12tsp/moves.hpp"

namespace p12tsp::cli {
namespace {

// Raised for a violated --expect; carries the message for stderr.
struct ExpectationUnmet {
  std::string message;
};

std::optional<int> suffix_number(std::string_view spec, std::string_view prefix) {
  if (!spec.starts_with(prefix)) return std::nullopt;
  const std::string_view digits = spec.substr(prefix.size());
  int value = 0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) {
    return std::nullopt;
  }
  return value;
}

ResolvedInstance from_family(const FamilyOutput& out) {
  return {out.instance, out.tour, out.reference_tour};
}

void write_report(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

// Subcommand options. Strings default to empty (unset).
struct Options {
  std::string instance, tour, optimal, family, expect, report;
  std::string out_instance, out_tour, out_reference;
  int k = 3;
  bool plus_plus = false;
  int n = 0;
  int s = 0;
  std::vector<double> ps;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int limit = kDefaultHeldKarpLimit;
  int workers = 1;
  int max_i = 10000;
  int n_min = 6, n_max = 12, instances = 50;
  bool quiet = false;
};

void check_expect(const Options& o, bool optimal) {
  if (o.expect.empty()) return;
  const std::string got = optimal ? "optimal" : "non-optimal";
  if (o.expect != got) throw ExpectationUnmet{"expectation unmet: expected " + o.expect + ", got " + got};
}

int cmd_gen(const Options& o, std::ostream& out) {
  FamilyOutput result = [&]() -> FamilyOutput {
    if (o.family == "random") {
      if (o.ps.size() != 1) throw CLI::ValidationError("--p", "random family takes exactly one --p");
      Instance instance = random_instance(o.n, o.ps.front(), o.seed);
      const int n = instance.size();
      return FamilyOutput{std::move(instance), Tour::identity(n), Tour::identity(n), 0, 0};
    }
    const auto family = parse_family(o.family);
    if (!family) throw CLI::ValidationError("--family", "unknown family '" + o.family + "'");
    switch (*family) {
      case Family::kTwoOptLb:
        return gen_two_opt_lb(o.n);
      case Family::kThreeOptLb:
        return gen_three_opt_lb(o.s);
      case Family::kThreeOptPpLb:
        return gen_three_opt_pp_lb(o.s);
    }
    throw std::logic_error("unreachable family");
  }();
  if (!o.out_instance.empty()) save_instance(o.out_instance, result.instance);
  if (!o.out_tour.empty()) save_tour(o.out_tour, result.tour);
  if (!o.out_reference.empty()) save_tour(o.out_reference, result.reference_tour);
  out << "family=" << o.family << '\n'
      << "n=" << result.instance.size() << '\n'
      << "cost1_edges=" << result.instance.cost1().size() << '\n';
  if (o.family != "random") {
    out << "tour_cost=" << tour_cost(result.instance, result.tour) << '\n'
        << "reference_cost=" << tour_cost(result.instance, result.reference_tour) << '\n';
  }
  return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const ResolvedInstance resolved = resolve_instance(o.instance);
  const int n = resolved.instance.size();
  const Tour start = !o.tour.empty()  ? resolve_tour(o.tour, resolved)
                     : o.seed_set     ? random_tour(n, o.seed)
                                      : Tour::identity(n);
  const Predicate predicate = o.plus_plus ? Predicate::kPlusPlus : Predicate::kPlain;
  const auto [tour, stats] = local_search(resolved.instance, start, o.k, predicate, o.workers);
  if (!o.out_tour.empty()) save_tour(o.out_tour, tour);
  out << "n=" << n << '\n'
      << "k=" << o.k << '\n'
      << "predicate=" << to_string(predicate) << '\n'
      << "start_cost=" << tour_cost(resolved.instance, start) << '\n'
      << "cost=" << stats.final_cost << '\n'
      << "zero_paths=" << stats.final_zero_paths << '\n'
      << "iterations=" << stats.iterations << '\n'
      << "moves_applied=" << stats.moves_applied << '\n';
  return kExitOk;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const ResolvedInstance resolved = resolve_instance(o.instance);
  const Tour tour = resolve_tour(o.tour, resolved);
  const Certificate cert = o.plus_plus
                               ? certify_kpp_optimal(resolved.instance, tour, o.k, o.workers)
                               : certify_k_optimal(resolved.instance, tour, o.k, o.workers);
  out << format_certificate(cert);
  check_expect(o, cert.optimal);
  return kExitOk;
}

int cmd_exact(const Options& o, std::ostream& out) {
  const ResolvedInstance resolved = resolve_instance(o.instance);
  const ExactResult result = held_karp(resolved.instance, o.limit);
  if (!o.out_tour.empty()) save_tour(o.out_tour, result.tour);
  out << "method=" << to_string(result.method) << '\n' << "cost=" << result.cost << '\n';
  return kExitOk;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const ResolvedInstance resolved = resolve_instance(o.instance);
  const Instance& instance = resolved.instance;
  const Tour tour = resolve_tour(o.tour, resolved);
  std::string source = "file";
  const Tour optimal = [&] {
    if (!o.optimal.empty()) return resolve_tour(o.optimal, resolved);
    source = "held-karp";
    return held_karp(instance, o.limit).tour;
  }();
  const CounterLedger ledger = distribute_counters(instance, tour, optimal);
  const CounterPropertyReport props = check_counter_properties(instance, tour, ledger);
  const RatioReport ratio = ratio_report(instance, tour, optimal);

  std::ostringstream report;
  report << "n=" << instance.size() << '\n'
         << "optimal_source=" << source << '\n'
         << "h=" << ledger.h << '\n'
         << "l=" << ledger.l << '\n'
         << "f=" << ledger.f << '\n'
         << "paths=" << ledger.decomposition.count() << '\n'
         << "counters_total=" << ledger.total() << '\n'
         << "counters_good=" << ledger.good() << '\n'
         << "counters_bad=" << ledger.bad() << '\n'
         << "bound_ok=" << (count_bound_check(ledger) ? "true" : "false") << '\n';
  for (std::size_t i = 0; i < props.properties.size(); ++i) {
    report << "prop" << i + 1 << '=' << pass_fail(props.properties[i].pass) << '\n';
  }
  for (std::size_t i = 0; i < props.properties.size(); ++i) {
    if (!props.properties[i].pass) {
      report << "prop" << i + 1 << "_witness=" << props.properties[i].witness << '\n';
    }
  }
  const PpPathReport pp = pp_path_checks(instance, tour, ledger);
  report << "pp_paths=" << pass_fail(pp.pass) << '\n';
  if (!pp.pass) report << "pp_paths_witness=" << pp.witness << '\n';
  report << "endpoint_pairs=" << endpoint_pair_violations(instance, tour).size() << '\n'
         << "constellation=" << (find_forbidden_constellation(instance, tour) ? "present" : "none")
         << '\n'
         << "cost_tour=" << ratio.cost_tour << '\n'
         << "cost_optimal=" << ratio.cost_reference << '\n'
         << "ratio=" << to_string(ratio.ratio) << '\n';
  write_report(o.report, report.str(), out);
  return kExitOk;
}

int cmd_verify_lemmas(const Options& o, std::ostream& out) {
  const DualCheck dual = dual_feasibility_check(o.max_i);
  bool ok = dual.feasible;
  out << "max_i=" << o.max_i << '\n';
  for (int i = 1; i <= std::min(o.max_i, 6); ++i) {
    const GbPair gb = gb_values(i);
    out << "gb i=" << gb.i << " g=" << gb.g << " b=" << gb.b << '\n';
  }
  out << "dual_feasible=" << (dual.feasible ? "true" : "false") << '\n';
  if (!dual.feasible) out << "dual_first_violation=" << dual.first_violation << '\n';
  for (int r : {1, 2, 0}) {
    const auto idx = static_cast<std::size_t>(r);
    if (o.max_i < (r == 0 ? 3 : r)) continue;
    out << "slack residue=" << r << " min=" << dual.min_slack[idx] << " max=" << dual.max_slack[idx]
        << '\n';
  }
  const Rational three_opt = ratio_upper_bound(Rational(12, 5));
  const Rational plus_plus = ratio_upper_bound(Rational(2));
  ok = ok && three_opt == Rational(11, 8) && plus_plus == Rational(4, 3);
  out << "ratio_bound d=0 value=" << to_string(ratio_upper_bound(Rational(0))) << '\n'
      << "ratio_bound d=2 value=" << to_string(plus_plus) << '\n'
      << "ratio_bound d=12/5 value=" << to_string(three_opt) << '\n';
  return ok ? kExitOk : kExitUnmet;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  SweepConfig config;
  config.n_min = o.n_min;
  config.n_max = o.n_max;
  config.instances = o.instances;
  if (!o.ps.empty()) config.ps = o.ps;
  config.seed = o.seed_set ? o.seed : config.seed;
  config.workers = o.workers;
  config.limit = o.limit;
  const SweepSummary summary = run_sweep(config);
  if (!o.report.empty()) write_report(o.report, format_sweep_runs(summary), out);
  else if (!o.quiet) out << format_sweep_runs(summary);
  out << format_sweep_summary(summary);
  return summary.violations == 0 ? kExitOk : kExitUnmet;
}

}  // namespace

ResolvedInstance resolve_instance(const std::string& spec) {
  if (spec == "hexa") {
    Instance instance(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {0, 2}});
    return {std::move(instance), Tour::identity(6), Tour({0, 2, 3, 4, 5, 1})};
  }
  if (auto n = suffix_number(spec, "two_opt_lb_n")) return from_family(gen_two_opt_lb(*n));
  if (auto s = suffix_number(spec, "three_opt_pp_lb_s")) return from_family(gen_three_opt_pp_lb(*s));
  if (auto s = suffix_number(spec, "three_opt_lb_s")) return from_family(gen_three_opt_lb(*s));
  return {load_instance(spec), std::nullopt, std::nullopt};
}

Tour resolve_tour(const std::string& spec, const ResolvedInstance& resolved) {
  if (spec == "identity") return Tour::identity(resolved.instance.size());
  if (spec == "construction" || spec == "reference") {
    const auto& tour = spec == "construction" ? resolved.construction : resolved.reference;
    if (!tour) throw std::invalid_argument("tour '" + spec + "' needs a builtin instance");
    return *tour;
  }
  Tour tour = load_tour(spec);
  require_tour_for(resolved.instance, tour);
  return tour;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local search, certification and analysis for the (1,2)-TSP", "p12tsp"};
  app.require_subcommand(1);
  Options o;

  auto add_k = [&](CLI::App* cmd) {
    cmd->add_option("--k", o.k, "Move size")->check(CLI::IsMember({2, 3}));
    cmd->add_flag("--plus-plus", o.plus_plus, "Use the ++ improvement rule");
  };
  auto add_workers = [&](CLI::App* cmd) {
    cmd->add_option("--workers", o.workers, "OpenMP threads")->check(CLI::PositiveNumber);
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", o.seed, "Random seed")->each([&](const std::string&) { o.seed_set = true; });
  };

  auto* gen = app.add_subcommand("gen", "Generate an instance family member");
  gen->add_option("--family", o.family, "two-opt-lb, three-opt-lb, three-opt-pp-lb or random")->required();
  gen->add_option("--n", o.n, "Vertex count (two-opt-lb, random)");
  gen->add_option("--s", o.s, "Segment count (three-opt-lb, three-opt-pp-lb)");
  gen->add_option("--p", o.ps, "Cost-1 probability (random)");
  add_seed(gen);
  gen->add_option("--out-instance", o.out_instance);
  gen->add_option("--out-tour", o.out_tour);
  gen->add_option("--out-reference", o.out_reference);

  auto* solve = app.add_subcommand("solve", "Run k-Opt or k-Opt++ local search");
  solve->add_option("--instance", o.instance)->required();
  solve->add_option("--tour", o.tour, "Start tour (default identity, or random with --seed)");
  add_k(solve);
  add_seed(solve);
  add_workers(solve);
  solve->add_option("--out-tour", o.out_tour);

  auto* certify = app.add_subcommand("certify", "Exhaustively check local optimality");
  certify->add_option("--instance", o.instance)->required();
  certify->add_option("--tour", o.tour)->required();
  add_k(certify);
  add_workers(certify);
  certify->add_option("--expect", o.expect)->check(CLI::IsMember({"optimal", "non-optimal"}));

  auto* exact = app.add_subcommand("exact", "Solve to optimality with Held-Karp");
  exact->add_option("--instance", o.instance)->required();
  exact->add_option("--limit", o.limit)->check(CLI::Range(3, 24));
  exact->add_option("--out-tour", o.out_tour);

  auto* analyze = app.add_subcommand("analyze", "Counter distribution and ratio report");
  analyze->add_option("--instance", o.instance)->required();
  analyze->add_option("--tour", o.tour)->required();
  analyze->add_option("--optimal", o.optimal, "Optimal tour (default: Held-Karp)");
  analyze->add_option("--limit", o.limit)->check(CLI::Range(3, 24));
  analyze->add_option("--report", o.report);

  auto* verify = app.add_subcommand("verify-lemmas", "Closed-form capacity and dual checks");
  verify->add_option("--max-i", o.max_i)->check(CLI::PositiveNumber);

  auto* sweep = app.add_subcommand("sweep", "Random-instance ratio and counter sweep");
  sweep->add_option("--n-min", o.n_min);
  sweep->add_option("--n-max", o.n_max);
  sweep->add_option("--instances", o.instances, "Instances per (n, p)");
  sweep->add_option("--p", o.ps, "Cost-1 probability; repeatable");
  add_seed(sweep);
  add_workers(sweep);
  sweep->add_option("--limit", o.limit)->check(CLI::Range(3, 24));
  sweep->add_option("--report", o.report, "Per-run lines go here instead of stdout");
  sweep->add_flag("--quiet", o.quiet, "Print the summary only");

  std::vector<std::string> argv_storage{"p12tsp"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (certify->parsed()) return cmd_certify(o, out);
    if (exact->parsed()) return cmd_exact(o, out);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (verify->parsed()) return cmd_verify_lemmas(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
  } catch (const ExpectationUnmet& e) {
    err << e.message << '\n';
    return kExitUnmet;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeExceededError& e) {
    err << "size limit: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace p12tsp::cli
