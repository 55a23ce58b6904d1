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
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "p12tsp/constructions.hpp"
#include "p12tsp/io.hpp"

namespace p12tsp {
namespace {

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

Tour parse_tour(const std::string& text) {
  std::istringstream in(text);
  return read_tour(in);
}

TEST(Io, InstanceRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = oracle::random_instance(3 + trial, 0.3, rng);
    std::ostringstream out;
    write_instance(out, inst);
    EXPECT_EQ(parse_instance(out.str()), inst);
  }
}

TEST(Io, TourRoundTrip) {
  std::mt19937_64 rng(4);
  for (int n : {3, 19, 20, 21, 45}) {
    const Tour tour = oracle::random_tour(n, rng);
    std::ostringstream out;
    write_tour(out, tour);
    EXPECT_EQ(parse_tour(out.str()), tour);
  }
}

TEST(Io, CommentsBlankLinesAndLineBreaks) {
  const Instance inst = parse_instance("# hexa\n\np12tsp 4\ne 0 1  # chord\n\ne 2 3\n");
  EXPECT_EQ(inst, Instance(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(parse_tour("tour 4\n3 1\n# split\n0\n 2\n"), Tour({3, 1, 0, 2}));
}

TEST(Io, InstanceParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("p12tsp 4\ne 1 0\n"), 2);    // u >= v
  EXPECT_EQ(line_of("p12tsp 4\ne 0 4\n"), 2);    // out of range
  EXPECT_EQ(line_of("p12tsp 4\ne 0 1\ne 0 1\n"), 3);
  EXPECT_EQ(line_of("p12tsp 4\nx 0 1\n"), 2);
  EXPECT_EQ(line_of("p12tsp 4\ne 0 z\n"), 2);
  EXPECT_EQ(line_of("tour 4\n"), 1);
  EXPECT_EQ(line_of("p12tsp 2\n"), 1);
  EXPECT_THROW(parse_instance(""), ParseError);
}

TEST(Io, TourParseErrors) {
  EXPECT_THROW(parse_tour("tour 4\n0 1 2\n"), ParseError);
  EXPECT_THROW(parse_tour("tour 4\n0 1 2 2\n"), ParseError);
  EXPECT_THROW(parse_tour("tour 4\n0 1 2 3 0\n"), ParseError);
  EXPECT_THROW(parse_tour("p12tsp 4\n0 1 2 3\n"), ParseError);
}

TEST(Io, FilesRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "p12tsp_io_test";
  std::filesystem::create_directories(dir);
  const auto fam = gen_three_opt_lb(3);
  save_instance(dir / "i.txt", fam.instance);
  save_tour(dir / "t.txt", fam.reference_tour);
  EXPECT_EQ(load_instance(dir / "i.txt"), fam.instance);
  EXPECT_EQ(load_tour(dir / "t.txt"), fam.reference_tour);
  EXPECT_THROW(load_instance(dir / "missing.txt"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace p12tsp
