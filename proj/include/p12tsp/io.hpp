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

// Text formats.
//
// Instance:
//   p12tsp <n>
//   e <u> <v>        one line per cost-1 edge, 0-based, u < v
//
// Tour:
//   tour <n>
//   <v0> <v1> ...    n whitespace-separated vertex ids, any line breaks
//
// Blank lines and '#' comments are ignored in both.

#ifndef P12TSP_IO_HPP_
#define P12TSP_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "p12tsp/core.hpp"

namespace p12tsp {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

Instance read_instance(std::istream& in);
Tour read_tour(std::istream& in);

void write_instance(std::ostream& out, const Instance& instance);
void write_tour(std::ostream& out, const Tour& tour);

Instance load_instance(const std::filesystem::path& path);
Tour load_tour(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const Instance& instance);
void save_tour(const std::filesystem::path& path, const Tour& tour);

}  // namespace p12tsp

#endif  // P12TSP_IO_HPP_
