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

#include "phrep/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#include "phrep/errors.hpp"
#include "phrep/io.hpp"

namespace phrep::bench {

std::vector<Row> run(const std::vector<Dataset>& datasets, const std::vector<Mode>& modes,
                     const Options& options) {
  const PrimeField field(options.modulus);
  std::vector<Row> rows;
  for (const auto& data : datasets) {
    RipsConfig cfg{data.max_dim, data.threshold, options.modulus};
    const auto filtration = Filtration::rips(data.distances, cfg);

    PersistenceOptions counting;
    counting.mode = Mode::involuted;
    const auto counts = compute_persistence(filtration, field, counting).counts;

    for (Mode mode : modes) {
      Row row{data.name, data.distances.size(), data.max_dim, data.threshold, mode, std::nullopt,
              counts, 0};
      PersistenceOptions run_options;
      run_options.mode = mode;
      run_options.oracle_cap = options.oracle_cap;
      try {
        for (int r = 0; r < std::max(1, options.repeats); ++r) {
          const auto start = std::chrono::steady_clock::now();
          const auto result = compute_persistence(filtration, field, run_options);
          const double elapsed =
              std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
          row.seconds = row.seconds ? std::min(*row.seconds, elapsed) : elapsed;
          row.pairs = result.pairs.size();
        }
      } catch (const CapacityError&) {
        row.seconds.reset();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string format_table(const std::vector<Row>& rows) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-18s %6s %4s %9s %-16s %12s %10s %12s %10s %8s\n", "dataset",
                "N", "dim", "r_max", "mode", "seconds", "m_d", "m_boundary", "m_D", "pairs");
  out += line;
  for (const auto& r : rows) {
    char seconds[32] = "refused";
    if (r.seconds) std::snprintf(seconds, sizeof(seconds), "%.4f", *r.seconds);
    const std::string threshold = std::isinf(r.threshold) ? "inf" : io::format_number(r.threshold);
    std::snprintf(line, sizeof(line), "%-18s %6zu %4d %9s %-16s %12s %10llu %12llu %10llu %8zu\n",
                  r.dataset.c_str(), r.points, r.max_dim, threshold.c_str(),
                  std::string(to_string(r.mode)).c_str(), seconds,
                  static_cast<unsigned long long>(r.counts.coboundary),
                  static_cast<unsigned long long>(r.counts.boundary),
                  static_cast<unsigned long long>(r.counts.restricted), r.pairs);
    out += line;
  }
  return out;
}

}  // namespace phrep::bench
