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
#include <string_view>
#include <vector>

#include "phrep/field.hpp"
#include "phrep/filtration.hpp"
#include "phrep/involuted.hpp"
#include "phrep/oracle.hpp"

namespace phrep {

enum class Mode {
  involuted,        // coboundary reduction, then restricted boundary reduction
  cohomology,       // coboundary reduction only; no representatives
  homology,         // sparse reduction of the full boundary matrices
  homology_oracle,  // dense textbook reduction (desk-scale only)
};

std::string_view to_string(Mode mode);
/// Throws std::invalid_argument for unknown names.
Mode parse_mode(std::string_view name);

struct PersistenceOptions {
  Mode mode = Mode::involuted;
  bool representatives = true;
  bool clearing = true;
  bool emergent = true;
  bool truncate = false;
  std::size_t oracle_cap = oracle::kDefaultColumnCap;
};

/// Column counts of the matrices a run touches.
struct ColumnCounts {
  std::uint64_t coboundary = 0;  // m_d: coboundary columns reduced (after clearing)
  std::uint64_t boundary = 0;    // m_boundary: all simplices through top_dim
  std::uint64_t restricted = 0;  // m_D: columns of the restricted matrices D_k
};

struct PersistenceResult {
  /// Sorted by (dim, birth value, death value, birth position).
  std::vector<PersistencePair> pairs;
  ColumnCounts counts;
  double phase_one_seconds = 0;
  double phase_two_seconds = 0;
};

/// Simplices of all dimensions 0..top_dim, computed arithmetically when the
/// filtration is an unbounded Rips filtration.
std::uint64_t boundary_column_count(const Filtration& filtration);

PersistenceResult compute_persistence(const Filtration& filtration, const PrimeField& field,
                                      const PersistenceOptions& options = {});

/// Orders pairs by (dim, birth value, death value with infinity last, birth
/// position).
void sort_pairs(std::vector<PersistencePair>& pairs);

}  // namespace phrep
