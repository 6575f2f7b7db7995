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
#include <span>
#include <vector>

#include "phrep/field.hpp"
#include "phrep/filtration.hpp"

namespace phrep {

/// One nonzero entry of a sparse column.
struct Term {
  double value = 0;
  Rank rank = 0;
  int dim = 0;
  Coefficient coeff = 0;

  Term() = default;
  Term(const FiltrationEntry& e, Coefficient c) : value(e.value), rank(e.rank), dim(e.dim), coeff(c) {}

  FiltrationEntry entry() const { return {value, rank, dim}; }
  friend bool operator==(const Term&, const Term&) = default;
};

inline bool term_less(const Term& a, const Term& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.rank < b.rank;
}

inline bool same_simplex(const Term& a, const Term& b) { return a.rank == b.rank && a.dim == b.dim; }

/// Sparse formal sum of simplices over Z/pZ, kept in ascending filtration
/// order with no zero coefficients.
class Chain {
 public:
  Chain() = default;

  /// Sorts, merges duplicates and drops zeros.
  static Chain from_terms(std::vector<Term> terms, const PrimeField& field);
  /// coeff * e; coeff must already be a nonzero residue.
  static Chain single(const FiltrationEntry& e, Coefficient coeff) {
    Chain c;
    c.terms_.emplace_back(e, coeff);
    return c;
  }

  std::span<const Term> terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Entry with maximal filtration position (the boundary-matrix pivot).
  const Term& latest() const { return terms_.back(); }
  /// Entry with minimal filtration position (the coboundary-matrix pivot).
  const Term& earliest() const { return terms_.front(); }

  /// 0 when `e` does not occur.
  Coefficient coefficient(const FiltrationEntry& e) const;

  /// *this += scale * other.
  void add_scaled(const Chain& other, Coefficient scale, const PrimeField& field);

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::vector<Term> terms_;
};

/// Boundary of a chain of simplices from `filtration`.
Chain boundary(const Chain& chain, const Filtration& filtration, const PrimeField& field);

}  // namespace phrep
