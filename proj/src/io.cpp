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

#include "p12tsp/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>
#include <vector>

namespace p12tsp {
namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

// Reads the header line `<keyword> <n>`; returns n.
int read_header(std::istream& in, std::string_view keyword, int& line_no) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = split_ws(strip_comment(raw));
    if (tokens.empty()) continue;
    if (tokens.size() != 2 || tokens[0] != keyword) {
      throw ParseError(line_no, "expected header '" + std::string(keyword) + " <n>'");
    }
    const int n = parse_int(tokens[1], line_no);
    if (n < Instance::kMinVertices) throw ParseError(line_no, "n must be at least 3");
    return n;
  }
  throw ParseError(line_no, "missing '" + std::string(keyword) + "' header");
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return in;
}

}  // namespace

Instance read_instance(std::istream& in) {
  int line_no = 0;
  const int n = read_header(in, "p12tsp", line_no);
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = split_ws(strip_comment(raw));
    if (tokens.empty()) continue;
    if (tokens.size() != 3 || tokens[0] != "e") {
      throw ParseError(line_no, "expected 'e <u> <v>'");
    }
    const int u = parse_int(tokens[1], line_no);
    const int v = parse_int(tokens[2], line_no);
    if (u < 0 || v >= n || u >= v) {
      throw ParseError(line_no, "edge endpoints must satisfy 0 <= u < v < n");
    }
    if (!seen.insert(Edge{u, v}).second) {
      throw ParseError(line_no, "duplicate edge " + to_string(Edge{u, v}));
    }
    edges.push_back(Edge{u, v});
  }
  return Instance(n, std::move(edges));
}

Tour read_tour(std::istream& in) {
  int line_no = 0;
  const int n = read_header(in, "tour", line_no);
  std::vector<Vertex> order;
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    for (auto token : split_ws(strip_comment(raw))) order.push_back(parse_int(token, line_no));
  }
  if (const TourDefect d = validate_tour(n, order); d != TourDefect::kNone) {
    throw ParseError(line_no, "invalid tour: " + std::string(to_string(d)));
  }
  return Tour(std::move(order));
}

void write_instance(std::ostream& out, const Instance& instance) {
  out << "p12tsp " << instance.size() << '\n';
  for (const Edge& e : instance.cost1()) out << "e " << e.u << ' ' << e.v << '\n';
}

void write_tour(std::ostream& out, const Tour& tour) {
  out << "tour " << tour.size() << '\n';
  constexpr int kPerLine = 20;
  for (int i = 0; i < tour.size(); ++i) {
    out << tour[i] << ((i + 1) % kPerLine == 0 || i + 1 == tour.size() ? '\n' : ' ');
  }
}

Instance load_instance(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  return read_instance(in);
}

Tour load_tour(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  return read_tour(in);
}

void save_instance(const std::filesystem::path& path, const Instance& instance) {
  auto out = open_for_write(path);
  write_instance(out, instance);
}

void save_tour(const std::filesystem::path& path, const Tour& tour) {
  auto out = open_for_write(path);
  write_tour(out, tour);
}

}  // namespace p12tsp
