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
#include <unordered_map>
#include <utility>
#include <vector>

#include "phrep/chain.hpp"
#include "phrep/field.hpp"
#include "phrep/filtration.hpp"
#include "phrep/reduction.hpp"

namespace phrep {

struct PersistencePair {
  int dim = 0;
  FiltrationEntry birth;
  std::optional<FiltrationEntry> death;  // nullopt: essential class
  std::optional<Chain> representative;

  bool essential() const { return !death.has_value(); }
  /// Birth and death at the same filtration value.
  bool trivial() const { return death && death->value == birth.value; }
};

/// What the coboundary reductions reveal about one dimension k.
struct DimensionSummary {
  std::vector<FiltrationEntry> deaths;      // homological death k-simplices, ascending
  std::vector<FiltrationEntry> essentials;  // essential k-simplices, ascending
  /// (birth k-simplex, death (k+1)-simplex), ascending by death.
  std::vector<std::pair<FiltrationEntry, FiltrationEntry>> pairs;
  std::size_t reduced_columns = 0;  // columns of d_k actually reduced
};

struct PhaseOneSummary {
  int max_dim = 0;
  /// Indexed by dimension 0..max_dim+1; dimension max_dim+1 carries deaths only.
  std::vector<DimensionSummary> dims;

  const DimensionSummary& at(int k) const { return dims.at(static_cast<std::size_t>(k)); }
};

struct PhaseOneOptions {
  bool clearing = true;
  bool emergent = true;
};

/// Reduces the coboundary matrices d_0..d_max_dim (max_dim = top_dim - 1),
/// clearing columns paired in the dimension below.
PhaseOneSummary phase_one(const Filtration& filtration, const PrimeField& field,
                          const PhaseOneOptions& options = {});

/// D_k: boundary columns of the death and essential k-simplices in
/// ascending filtration order. With `truncate`, death columns after the
/// last nontrivial death (and after the last essential column) are dropped.
/// Throws std::invalid_argument if k > max_dim + 1.
BoundarySource assemble_restricted(const PhaseOneSummary& summary, int k,
                                   const Filtration& filtration, const PrimeField& field,
                                   bool truncate = false);

struct PhaseTwoOptions {
  bool representatives = true;
  bool truncate = false;
  bool emergent = true;
};

struct PhaseTwoResult {
  /// Every pair from phase one, with representatives attached where computed.
  std::vector<PersistencePair> pairs;
  /// Column count of D_k for k = 0..max_dim+1.
  std::vector<std::size_t> restricted_columns;
};

/// Reduces D_0..D_{max_dim+1}. Pivot columns of D_{q+1} are the dim-q pairs
/// and their reduced columns the representatives; essential q-simplices
/// zero out in D_q and their tracked combinations are the essential
/// representatives. Throws ConsistencyError if the pairing differs from
/// phase one.
PhaseTwoResult phase_two(const PhaseOneSummary& summary, const Filtration& filtration,
                         const PrimeField& field, const PhaseTwoOptions& options = {});

/// Death k-simplices of a full simplex on n points:
/// C(n,k) - C(n,k-1) + ... +- C(n,0).
std::int64_t expected_death_count(std::size_t n, int k);

}  // namespace phrep
