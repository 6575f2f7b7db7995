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

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "phrep/chain.hpp"
#include "phrep/field.hpp"
#include "phrep/filtration.hpp"

namespace phrep {

/// Which entry of a column is its pivot ("low"). Boundary matrices list rows
/// in filtration order, so the pivot is the latest simplex; coboundary
/// matrices are anti-transposed, so it is the earliest.
enum class PivotRule { latest, earliest };

/// Provides the columns of a matrix to reduce: owners in processing order
/// and, for each owner, its unreduced column.
template <class S>
concept ColumnSource = requires(const S& s, const FiltrationEntry& owner, std::vector<Term>& out) {
  { s.owners() } -> std::convertible_to<std::span<const FiltrationEntry>>;
  { s.pivot_rule() } -> std::same_as<PivotRule>;
  s.column(owner, out);
};

/// Columns of the coboundary matrix d_dim: dim-simplices in reverse
/// filtration order, each listing its cofacets.
class CoboundarySource {
 public:
  CoboundarySource(const Filtration& filtration, const PrimeField& field, int dim);

  std::span<const FiltrationEntry> owners() const { return owners_; }
  PivotRule pivot_rule() const { return PivotRule::earliest; }
  int dim() const { return dim_; }
  void column(const FiltrationEntry& owner, std::vector<Term>& out) const;

  template <class Pred>
  void remove_owners_if(Pred&& pred) {
    std::erase_if(owners_, std::forward<Pred>(pred));
  }

 private:
  const Filtration* filtration_;
  const PrimeField* field_;
  int dim_;
  std::vector<FiltrationEntry> owners_;
  mutable std::vector<Vertex> scratch_;
};

/// Columns of the boundary matrix restricted to `owners` (ascending order).
class BoundarySource {
 public:
  /// All dim-simplices: the full boundary matrix.
  BoundarySource(const Filtration& filtration, const PrimeField& field, int dim);
  BoundarySource(const Filtration& filtration, const PrimeField& field, int dim,
                 std::vector<FiltrationEntry> owners);

  std::span<const FiltrationEntry> owners() const { return owners_; }
  PivotRule pivot_rule() const { return PivotRule::latest; }
  int dim() const { return dim_; }
  void column(const FiltrationEntry& owner, std::vector<Term>& out) const;

  template <class Pred>
  void remove_owners_if(Pred&& pred) {
    std::erase_if(owners_, std::forward<Pred>(pred));
  }

 private:
  const Filtration* filtration_;
  const PrimeField* field_;
  int dim_;
  std::vector<FiltrationEntry> owners_;
  mutable std::vector<Vertex> scratch_;
};

enum class ColumnStrategy {
  lazy_heap,  // accumulate additions in a heap, cancel when popping the pivot
  merge,      // keep the working column normalized after every addition
};

struct ReductionOptions {
  /// Record the column operations (the reduction matrix V) per column.
  bool track = false;
  /// Columns whose pivot is free on arrival are stored by reference and
  /// regenerated from the source on demand instead of being copied.
  bool emergent = true;
  ColumnStrategy strategy = ColumnStrategy::lazy_heap;
  /// With tracking on, which zeroed columns keep their record. Empty keeps all.
  std::function<bool(const FiltrationEntry&)> keep_zeroed_record;
};

/// A column with a pivot after reduction.
struct ReducedColumn {
  FiltrationEntry owner;
  Term pivot;
  Chain column;     // empty when `implicit`
  bool implicit = false;  // column equals the unreduced source column
  Chain record;     // owner-indexed combination; empty unless tracking
};

/// A column that reduced to zero.
struct ZeroedColumn {
  FiltrationEntry owner;
  std::optional<Chain> record;
};

/// Result of reducing one matrix left to right.
class ReductionState {
 public:
  ReductionState(PivotRule rule, bool tracking) : rule_(rule), tracking_(tracking) {}

  PivotRule rule() const { return rule_; }
  bool tracking() const { return tracking_; }
  std::span<const ReducedColumn> columns() const { return columns_; }
  std::span<const ZeroedColumn> zeroed() const { return zeroed_; }
  std::size_t processed() const { return columns_.size() + zeroed_.size(); }

  /// Column whose pivot is `row`, or nullptr. Rows of one matrix share a
  /// dimension, so the rank identifies them.
  const ReducedColumn* column_with_pivot(Rank row) const {
    auto it = pivot_index_.find(row);
    return it == pivot_index_.end() ? nullptr : &columns_[it->second];
  }
  bool has_pivot(Rank row) const { return pivot_index_.contains(row); }

  /// (pivot row, owner) for every pivot-bearing column in processing order.
  std::vector<std::pair<FiltrationEntry, FiltrationEntry>> pivot_pairs() const;

  /// The reduced column as a chain, regenerating implicit columns.
  template <ColumnSource S>
  Chain column_chain(const ReducedColumn& c, const S& source, const PrimeField& field) const;

  /// Record of a pivot column (identity for implicit columns).
  Chain record_chain(const ReducedColumn& c) const;

 private:
  template <ColumnSource S>
  friend void reduce_column(std::vector<Term> column, const FiltrationEntry& owner,
                            ReductionState& state, const S& source, const PrimeField& field,
                            const ReductionOptions& options);

  bool precedes(const FiltrationEntry& a, const FiltrationEntry& b) const {
    return rule_ == PivotRule::latest ? filtration_less(a, b) : filtration_less(b, a);
  }

  PivotRule rule_;
  bool tracking_;
  std::vector<ReducedColumn> columns_;
  std::vector<ZeroedColumn> zeroed_;
  std::unordered_map<Rank, std::size_t> pivot_index_;
  std::optional<FiltrationEntry> last_owner_;
};

namespace detail {

// Heap order placing the pivot candidate on top.
struct PivotOnTop {
  PivotRule rule;
  bool operator()(const Term& a, const Term& b) const {
    return rule == PivotRule::latest ? term_less(a, b) : term_less(b, a);
  }
};

// Pops cancelled entries and returns the surviving pivot (left on the heap).
inline std::optional<Term> heap_pivot(std::vector<Term>& heap, PivotOnTop order,
                                      const PrimeField& field) {
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), order);
    Term top = heap.back();
    heap.pop_back();
    while (!heap.empty() && same_simplex(heap.front(), top)) {
      top.coeff = field.add(top.coeff, heap.front().coeff);
      std::pop_heap(heap.begin(), heap.end(), order);
      heap.pop_back();
    }
    if (top.coeff != 0) {
      heap.push_back(top);
      std::push_heap(heap.begin(), heap.end(), order);
      return top;
    }
  }
  return std::nullopt;
}

inline void push_scaled(std::vector<Term>& heap, PivotOnTop order, std::span<const Term> terms,
                        Coefficient scale, const PrimeField& field) {
  for (const auto& t : terms) {
    heap.push_back(t);
    heap.back().coeff = field.multiply(t.coeff, scale);
    std::push_heap(heap.begin(), heap.end(), order);
  }
}

}  // namespace detail

/// Reduces `column` (owned by `owner`) against the columns already in
/// `state`: while its pivot collides with a stored pivot, subtract the
/// multiple of that column cancelling the pivot. Owners must arrive in
/// processing order; a violation throws std::logic_error.
template <ColumnSource S>
void reduce_column(std::vector<Term> column, const FiltrationEntry& owner, ReductionState& state,
                   const S& source, const PrimeField& field, const ReductionOptions& options) {
  if (state.last_owner_ && !state.precedes(*state.last_owner_, owner)) {
    throw std::logic_error("columns must be reduced in processing order");
  }
  state.last_owner_ = owner;

  const detail::PivotOnTop order{state.rule_};
  const bool tracking = state.tracking_;
  std::vector<Term> record;
  if (tracking) record.emplace_back(owner, 1);
  bool modified = false;
  std::vector<Term> scratch;

  // lazy_heap keeps `column` as a heap; merge keeps `working` normalized.
  Chain working;
  if (options.strategy == ColumnStrategy::lazy_heap) {
    std::make_heap(column.begin(), column.end(), order);
  } else {
    working = Chain::from_terms(std::move(column), field);
  }

  auto current_pivot = [&]() -> std::optional<Term> {
    if (options.strategy == ColumnStrategy::lazy_heap) return detail::heap_pivot(column, order, field);
    if (working.empty()) return std::nullopt;
    return state.rule_ == PivotRule::latest ? working.latest() : working.earliest();
  };

  while (true) {
    const auto pivot = current_pivot();
    if (!pivot) {
      ZeroedColumn z{owner, std::nullopt};
      if (tracking && (!options.keep_zeroed_record || options.keep_zeroed_record(owner))) {
        z.record = Chain::from_terms(std::move(record), field);
      }
      state.zeroed_.push_back(std::move(z));
      return;
    }
    auto it = state.pivot_index_.find(pivot->rank);
    if (it == state.pivot_index_.end()) {
      ReducedColumn c{owner, *pivot, {}, false, {}};
      if (!modified && options.emergent) {
        c.implicit = true;
      } else if (options.strategy == ColumnStrategy::lazy_heap) {
        c.column = Chain::from_terms(std::move(column), field);
      } else {
        c.column = std::move(working);
      }
      if (tracking && !c.implicit) c.record = Chain::from_terms(std::move(record), field);
      state.pivot_index_.emplace(pivot->rank, state.columns_.size());
      state.columns_.push_back(std::move(c));
      return;
    }
    modified = true;
    const ReducedColumn& other = state.columns_[it->second];
    // lambda cancels the pivot: column -= lambda * other
    const Coefficient lambda = field.divide(pivot->coeff, other.pivot.coeff);
    const Coefficient scale = field.negate(lambda);
    std::span<const Term> other_terms;
    if (other.implicit) {
      scratch.clear();
      source.column(other.owner, scratch);
      other_terms = scratch;
    } else {
      other_terms = other.column.terms();
    }
    if (options.strategy == ColumnStrategy::lazy_heap) {
      detail::push_scaled(column, order, other_terms, scale, field);
    } else if (other.implicit) {
      working.add_scaled(Chain::from_terms(scratch, field), scale, field);
    } else {
      working.add_scaled(other.column, scale, field);
    }
    if (tracking) {
      if (other.implicit) {
        record.emplace_back(other.owner, scale);
      } else {
        for (const auto& t : other.record.terms()) {
          record.push_back(t);
          record.back().coeff = field.multiply(t.coeff, scale);
        }
      }
    }
  }
}

/// Reduces every column of `source` in order.
template <ColumnSource S>
ReductionState reduce_all(const S& source, const PrimeField& field,
                          const ReductionOptions& options = {}) {
  ReductionState state(source.pivot_rule(), options.track);
  std::vector<Term> column;
  for (const auto& owner : source.owners()) {
    column.clear();
    source.column(owner, column);
    reduce_column(column, owner, state, source, field, options);
  }
  return state;
}

/// Drops the columns of `source` whose owners were pivots of the adjacent
/// lower-dimensional coboundary reduction; those columns reduce to zero.
template <ColumnSource S>
S clear_columns(const ReductionState& lower, S source) {
  source.remove_owners_if([&](const FiltrationEntry& e) { return lower.has_pivot(e.rank); });
  return source;
}

template <ColumnSource S>
Chain ReductionState::column_chain(const ReducedColumn& c, const S& source,
                                   const PrimeField& field) const {
  if (!c.implicit) return c.column;
  std::vector<Term> terms;
  source.column(c.owner, terms);
  return Chain::from_terms(std::move(terms), field);
}

}  // namespace phrep
