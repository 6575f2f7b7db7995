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
#include <vector>

#include "phrep/chain.hpp"
#include "phrep/field.hpp"
#include "phrep/filtration.hpp"
#include "phrep/involuted.hpp"

namespace phrep::oracle {

// Textbook dense reduction of the full boundary matrix. Slow on purpose:
// simplices are enumerated as explicit vertex tuples and every matrix is
// stored densely, sharing no code path with the sparse engine.

inline constexpr std::size_t kDefaultColumnCap = 20000;

/// Row-major grid with rows and columns labelled by simplices in
/// filtration order.
struct DenseMatrix {
  std::vector<FiltrationEntry> rows;
  std::vector<FiltrationEntry> cols;
  std::vector<Coefficient> entries;

  Coefficient at(std::size_t r, std::size_t c) const { return entries[r * cols.size() + c]; }
  Coefficient& at(std::size_t r, std::size_t c) { return entries[r * cols.size() + c]; }
};

/// Every simplex of dimension 0..top_dim in filtration order; an entry's
/// index is its position. Throws CapacityError above `cap` simplices.
std::vector<FiltrationEntry> filtration_order(const Filtration& filtration,
                                              std::size_t cap = kDefaultColumnCap);

/// The boundary matrix of dim-simplices (rows: (dim-1)-simplices).
DenseMatrix boundary_matrix(const Filtration& filtration, const PrimeField& field, int dim,
                            std::size_t cap = kDefaultColumnCap);

struct OracleResult {
  std::vector<FiltrationEntry> order;
  /// Reduced boundary matrices, index p holds the reduction of the
  /// p-boundary matrix (index 0 is empty).
  std::vector<DenseMatrix> reduced;
  /// Pairs of dimension <= max_dim and essential classes, with
  /// representatives.
  std::vector<PersistencePair> pairs;
};

/// Throws CapacityError above `cap` simplices.
OracleResult full_reduce(const Filtration& filtration, const PrimeField& field,
                         std::size_t cap = kDefaultColumnCap);

/// True iff `chain` (a dim-chain) is a linear combination of boundaries of
/// (dim+1)-simplices at or before `limit` in filtration order.
bool in_boundary_span(const Chain& chain, int dim, const FiltrationEntry& limit,
                      const Filtration& filtration, const PrimeField& field,
                      std::size_t cap = kDefaultColumnCap);

}  // namespace phrep::oracle
