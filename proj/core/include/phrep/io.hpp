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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "phrep/filtration.hpp"

namespace phrep::io {

enum class InputFormat { automatic, lower_distance, point_cloud };

/// Throws std::invalid_argument for unknown names
/// ("auto", "lower-distance", "point-cloud").
InputFormat parse_input_format(std::string_view name);

/// Lower-triangular distance matrix: numbers separated by ',' and/or
/// whitespace, d(1,0), d(2,0), d(2,1), d(3,0), ... The entry count must be
/// n(n-1)/2. Throws InputFormatError.
DistanceMatrix parse_lower_distance(std::string_view text);

/// One point per line, coordinates separated by ',' and/or whitespace;
/// Euclidean distances. Throws InputFormatError on ragged rows.
DistanceMatrix parse_point_cloud(std::string_view text);

/// Chooses lower-distance when the line lengths read 1, 2, 3, ... (an
/// optional empty first row allowed) or when there is a single line, and
/// point-cloud when all lines have the same length.
InputFormat detect_format(std::string_view text);

DistanceMatrix parse_input(std::string_view text, InputFormat format);

/// Lower-triangular rows, one per line, shortest round-trip decimals.
std::string write_lower_distance(const DistanceMatrix& d);

std::string write_point_cloud(const std::vector<std::vector<double>>& points);

/// Shortest decimal that parses back to exactly `value`.
std::string format_number(double value);

/// Reads a whole file; throws InputFormatError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace phrep::io
