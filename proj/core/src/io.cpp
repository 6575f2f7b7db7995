// Copyright 2026 The phrep Authors
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

#include "phrep/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "phrep/errors.hpp"
#include "phrep/generators.hpp"

namespace phrep::io {

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

// Tokens of [begin, end) of `text`, offsets relative to `text`.
std::vector<Token> tokenize(std::string_view text, std::size_t begin, std::size_t end) {
  std::vector<Token> tokens;
  std::size_t i = begin;
  while (i < end) {
    while (i < end && is_separator(text[i])) ++i;
    const std::size_t start = i;
    while (i < end && !is_separator(text[i])) ++i;
    if (i > start) tokens.push_back({text.substr(start, i - start), start});
  }
  return tokens;
}

double parse_number(const Token& token) {
  double value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw InputFormatError("non-numeric token '" + std::string(token.text) + "' at byte " +
                               std::to_string(token.offset),
                           token.offset);
  }
  return value;
}

struct Line {
  std::size_t begin;
  std::size_t end;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      lines.push_back({start, i});
      start = i + 1;
    }
  }
  return lines;
}

}  // namespace

InputFormat parse_input_format(std::string_view name) {
  if (name == "auto") return InputFormat::automatic;
  if (name == "lower-distance") return InputFormat::lower_distance;
  if (name == "point-cloud") return InputFormat::point_cloud;
  throw std::invalid_argument("unknown input format '" + std::string(name) + "'");
}

DistanceMatrix parse_lower_distance(std::string_view text) {
  const auto tokens = tokenize(text, 0, text.size());
  std::vector<double> values;
  values.reserve(tokens.size());
  for (const auto& t : tokens) values.push_back(parse_number(t));

  const std::size_t count = values.size();
  std::size_t n = 1;
  while (n * (n - 1) / 2 < count) ++n;
  if (n * (n - 1) / 2 != count) {
    const std::size_t below = (n - 1) * (n - 2) / 2;
    const std::size_t nearest = (count - below <= n * (n - 1) / 2 - count) ? n - 1 : n;
    throw InputFormatError("lower-distance input has " + std::to_string(count) +
                               " entries, which is not triangular; nearest valid point count is " +
                               std::to_string(nearest) + " (" +
                               std::to_string(nearest * (nearest - 1) / 2) + " entries)",
                           text.size());
  }
  for (std::size_t i = 0; i < count; ++i) {
    if (values[i] < 0) {
      throw InputFormatError("negative distance at byte " + std::to_string(tokens[i].offset),
                             tokens[i].offset);
    }
  }
  return DistanceMatrix::from_lower_triangle(n, values);
}

DistanceMatrix parse_point_cloud(std::string_view text) {
  std::vector<std::vector<double>> points;
  std::size_t arity = 0;
  for (const auto& line : split_lines(text)) {
    const auto tokens = tokenize(text, line.begin, line.end);
    if (tokens.empty()) continue;
    if (points.empty()) {
      arity = tokens.size();
    } else if (tokens.size() != arity) {
      throw InputFormatError("ragged point cloud: line at byte " + std::to_string(line.begin) +
                                 " has " + std::to_string(tokens.size()) +
                                 " coordinates, expected " + std::to_string(arity),
                             line.begin);
    }
    std::vector<double> p;
    p.reserve(tokens.size());
    for (const auto& t : tokens) p.push_back(parse_number(t));
    points.push_back(std::move(p));
  }
  if (points.empty()) throw InputFormatError("point cloud has no points", 0);

  return gen::euclidean(points);
}

InputFormat detect_format(std::string_view text) {
  std::vector<std::size_t> arities;
  for (const auto& line : split_lines(text)) {
    arities.push_back(tokenize(text, line.begin, line.end).size());
  }
  while (!arities.empty() && arities.back() == 0) arities.pop_back();
  const std::size_t first = (!arities.empty() && arities.front() == 0) ? 1 : 0;
  const std::size_t lines = arities.size() - first;
  if (lines <= 1) return InputFormat::lower_distance;

  bool rows = true;
  bool uniform = true;
  for (std::size_t i = first; i < arities.size(); ++i) {
    if (arities[i] != i - first + 1) rows = false;
    if (arities[i] != arities[first]) uniform = false;
  }
  if (rows) return InputFormat::lower_distance;
  if (uniform) return InputFormat::point_cloud;
  throw InputFormatError("cannot detect input format: line lengths match neither a lower-distance "
                         "matrix nor a point cloud",
                         0);
}

DistanceMatrix parse_input(std::string_view text, InputFormat format) {
  if (format == InputFormat::automatic) format = detect_format(text);
  return format == InputFormat::lower_distance ? parse_lower_distance(text)
                                               : parse_point_cloud(text);
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buffer, ptr);
}

std::string write_lower_distance(const DistanceMatrix& d) {
  std::string out;
  for (std::size_t i = 1; i < d.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (j > 0) out += ',';
      out += format_number(d(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string write_point_cloud(const std::vector<std::vector<double>>& points) {
  std::string out;
  for (const auto& p : points) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k > 0) out += ',';
      out += format_number(p[k]);
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputFormatError("cannot open input file '" + path + "'", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace phrep::io
