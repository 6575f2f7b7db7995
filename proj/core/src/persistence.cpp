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

#include "phrep/persistence.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "phrep/reduction.hpp"

namespace phrep {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Full boundary reductions, top dimension first so that the pairs of
// dimension q are known before deciding which zero columns of the
// q-boundary matrix are essential.
std::vector<PersistencePair> sparse_homology(const Filtration& filtration, const PrimeField& field,
                                             const PersistenceOptions& options) {
  const int top = filtration.top_dim();
  std::vector<PersistencePair> out;
  std::unordered_set<Rank> births;  // pivot rows of the dimension above
  for (int p = top; p >= 0; --p) {
    const BoundarySource source(filtration, field, p);
    ReductionOptions reduction;
    reduction.emergent = options.emergent;
    reduction.track = options.representatives && p < top;
    reduction.keep_zeroed_record = [&](const FiltrationEntry& e) { return !births.contains(e.rank); };
    const auto state = reduce_all(source, field, reduction);

    for (const auto& z : state.zeroed()) {
      if (p < top && !births.contains(z.owner.rank)) {
        std::optional<Chain> rep;
        if (options.representatives) rep = z.record ? *z.record : Chain::single(z.owner, 1);
        out.push_back({p, z.owner, std::nullopt, std::move(rep)});
      }
    }
    births.clear();
    for (const auto& column : state.columns()) {
      births.insert(column.pivot.rank);
      std::optional<Chain> rep;
      if (options.representatives) rep = state.column_chain(column, source, field);
      out.push_back({p - 1, column.pivot.entry(), column.owner, std::move(rep)});
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::involuted: return "involuted";
    case Mode::cohomology: return "cohomology";
    case Mode::homology: return "homology";
    case Mode::homology_oracle: return "homology-oracle";
  }
  return "unknown";
}

Mode parse_mode(std::string_view name) {
  for (Mode m : {Mode::involuted, Mode::cohomology, Mode::homology, Mode::homology_oracle}) {
    if (to_string(m) == name) return m;
  }
  throw std::invalid_argument("unknown mode '" + std::string(name) + "'");
}

std::uint64_t boundary_column_count(const Filtration& filtration) {
  std::uint64_t total = 0;
  for (int dim = 0; dim <= filtration.top_dim(); ++dim) total += filtration.count(dim);
  return total;
}

void sort_pairs(std::vector<PersistencePair>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const PersistencePair& a, const PersistencePair& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth.value != b.birth.value) return a.birth.value < b.birth.value;
    const double da = a.death ? a.death->value : kInfinity;
    const double db = b.death ? b.death->value : kInfinity;
    if (da != db) return da < db;
    return filtration_less(a.birth, b.birth);
  });
}

PersistenceResult compute_persistence(const Filtration& filtration, const PrimeField& field,
                                      const PersistenceOptions& options) {
  PersistenceResult result;
  result.counts.boundary = boundary_column_count(filtration);
  const auto start = Clock::now();

  switch (options.mode) {
    case Mode::involuted:
    case Mode::cohomology: {
      const auto summary = phase_one(filtration, field, {options.clearing, options.emergent});
      result.phase_one_seconds = seconds_since(start);
      for (const auto& dim : summary.dims) result.counts.coboundary += dim.reduced_columns;
      if (options.mode == Mode::cohomology) {
        for (int q = 0; q <= summary.max_dim; ++q) {
          for (const auto& [birth, death] : summary.at(q).pairs) {
            result.pairs.push_back({q, birth, death, std::nullopt});
          }
          for (const auto& e : summary.at(q).essentials) {
            result.pairs.push_back({q, e, std::nullopt, std::nullopt});
          }
        }
        break;
      }
      const auto phase_two_start = Clock::now();
      auto two = phase_two(summary, filtration, field,
                           {options.representatives, options.truncate, options.emergent});
      result.phase_two_seconds = seconds_since(phase_two_start);
      for (auto c : two.restricted_columns) result.counts.restricted += c;
      result.pairs = std::move(two.pairs);
      break;
    }
    case Mode::homology:
      result.pairs = sparse_homology(filtration, field, options);
      result.phase_one_seconds = seconds_since(start);
      break;
    case Mode::homology_oracle: {
      auto reduced = oracle::full_reduce(filtration, field, options.oracle_cap);
      result.pairs = std::move(reduced.pairs);
      if (!options.representatives) {
        for (auto& p : result.pairs) p.representative.reset();
      }
      result.phase_one_seconds = seconds_since(start);
      break;
    }
  }
  sort_pairs(result.pairs);
  return result;
}

}  // namespace phrep
