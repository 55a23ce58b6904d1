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

#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include "p12tsp/cli.hpp"
#include "p12tsp/constructions.hpp"
#include "p12tsp/io.hpp"

namespace p12tsp::cli {
namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"certify", "--instance", "hexa", "--tour", "identity", "--k", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"certify", "--instance", "/nonexistent/file", "--tour", "identity"}).code, kExitUsage);
}

TEST(Cli, SizeExceededExitsTwo) {
  const Outcome o = invoke({"exact", "--instance", "three_opt_lb_s3"});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("supply a reference tour"), std::string::npos);
}

TEST(Cli, CertifyExpectations) {
  const Outcome ok = invoke({"certify", "--instance", "three_opt_lb_s12", "--tour", "construction",
                             "--k", "3", "--expect", "optimal"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_TRUE(has_line(ok.out, "verdict=optimal k=3 predicate=plain examined=549104"));
  EXPECT_EQ(invoke({"certify", "--instance", "hexa", "--tour", "identity", "--expect", "optimal"}).code,
            kExitUnmet);
  EXPECT_EQ(invoke({"certify", "--instance", "hexa", "--tour", "identity", "--expect", "non-optimal"}).code,
            kExitOk);
}

TEST(Cli, AnalyzeHexa) {
  const Outcome o = invoke({"analyze", "--instance", "hexa", "--tour", "identity"});
  EXPECT_EQ(o.code, kExitOk);
  for (const char* line : {"h=4", "counters_total=5", "counters_good=2", "prop4=fail",
                           "prop4_witness=p=1 w=2", "bound_ok=true", "ratio=8/7"}) {
    EXPECT_TRUE(has_line(o.out, line)) << line;
  }
}

TEST(Cli, VerifySubcommand) {
  const Outcome o = invoke({"verify-lemmas"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_TRUE(has_line(o.out, "dual_feasible=true"));
  EXPECT_TRUE(has_line(o.out, "ratio_bound d=12/5 value=11/8"));
  EXPECT_TRUE(has_line(o.out, "ratio_bound d=2 value=4/3"));
}

TEST(Cli, SolveImprovesHexa) {
  const Outcome o = invoke({"solve", "--instance", "hexa", "--tour", "identity"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_TRUE(has_line(o.out, "cost=7"));
}

TEST(Cli, GenRoundTripThroughFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "p12tsp_cli_test";
  std::filesystem::create_directories(dir);
  const std::string inst = (dir / "i.txt").string();
  const std::string tour = (dir / "t.txt").string();
  const std::string ref = (dir / "r.txt").string();
  const Outcome gen = invoke({"gen", "--family", "three-opt-lb", "--s", "3", "--out-instance", inst,
                              "--out-tour", tour, "--out-reference", ref});
  ASSERT_EQ(gen.code, kExitOk);
  const auto fam = gen_three_opt_lb(3);
  EXPECT_EQ(load_instance(inst), fam.instance);
  EXPECT_EQ(load_tour(tour), fam.tour);
  EXPECT_EQ(load_tour(ref), fam.reference_tour);
  const Outcome cert = invoke({"certify", "--instance", inst, "--tour", tour, "--expect", "optimal"});
  EXPECT_EQ(cert.code, kExitOk);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ResolveBuiltins) {
  const ResolvedInstance r = resolve_instance("two_opt_lb_n9");
  EXPECT_EQ(r.instance, gen_two_opt_lb(9).instance);
  EXPECT_EQ(resolve_tour("construction", r), gen_two_opt_lb(9).tour);
  EXPECT_EQ(resolve_tour("identity", r), Tour::identity(9));
  const ResolvedInstance hexa = resolve_instance("hexa");
  EXPECT_EQ(hexa.instance.size(), 6);
}

TEST(Sweep, DeterministicAcrossWorkers) {
  SweepConfig config;
  config.n_min = 6;
  config.n_max = 9;
  config.instances = 4;
  config.ps = {0.3, 0.6};
  config.workers = 1;
  const SweepSummary one = run_sweep(config);
  config.workers = 3;
  const SweepSummary three = run_sweep(config);
  EXPECT_EQ(one.instances, 32);
  EXPECT_EQ(one.runs.size(), 128u);
  EXPECT_EQ(format_sweep_runs(one), format_sweep_runs(three));
  EXPECT_EQ(format_sweep_summary(one), format_sweep_summary(three));
  EXPECT_EQ(one.violations, 0);
  EXPECT_LE(one.max_ratio_plain, Rational(11, 8));
  EXPECT_LE(one.max_ratio_plus_plus, Rational(4, 3));
}

TEST(Sweep, CommandLineMatchesLibrary) {
  const Outcome o = invoke({"sweep", "--n-min", "6", "--n-max", "7", "--instances", "2", "--quiet"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_TRUE(has_line(o.out, "violations=0"));
  EXPECT_TRUE(has_line(o.out, "runs=16"));
}

}  // namespace
}  // namespace p12tsp::cli
