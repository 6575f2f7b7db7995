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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phrep/filtration.hpp"
#include "phrep/persistence.hpp"

namespace phrep::bench {

struct Dataset {
  std::string name;
  DistanceMatrix distances;
  int max_dim = 1;
  double threshold = kInfinity;
};

struct Options {
  std::uint32_t modulus = 2;
  int repeats = 1;  // the minimum wall time over repeats is reported
  std::size_t oracle_cap = oracle::kDefaultColumnCap;
};

struct Row {
  std::string dataset;
  std::size_t points = 0;
  int max_dim = 0;
  double threshold = kInfinity;
  Mode mode = Mode::involuted;
  std::optional<double> seconds;  // nullopt: the mode refused the instance
  ColumnCounts counts;            // from the involuted pipeline on this dataset
  std::size_t pairs = 0;
};

/// Runs every dataset x mode cell sequentially.
std::vector<Row> run(const std::vector<Dataset>& datasets, const std::vector<Mode>& modes,
                     const Options& options = {});

/// Fixed-width table, one line per row.
std::string format_table(const std::vector<Row>& rows);

}  // namespace phrep::bench
