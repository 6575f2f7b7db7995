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

#include "phrep/involuted.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "phrep/errors.hpp"

namespace phrep {

namespace {

bool contains(const std::vector<FiltrationEntry>& sorted, const FiltrationEntry& e) {
  return std::binary_search(sorted.begin(), sorted.end(), e, FiltrationLess{});
}

}  // namespace

PhaseOneSummary phase_one(const Filtration& filtration, const PrimeField& field,
                          const PhaseOneOptions& options) {
  PhaseOneSummary summary;
  summary.max_dim = filtration.top_dim() - 1;
  summary.dims.resize(static_cast<std::size_t>(summary.max_dim) + 2);

  ReductionOptions reduction;
  reduction.emergent = options.emergent;

  std::optional<ReductionState> previous;
  for (int k = 0; k <= summary.max_dim; ++k) {
    auto& dim = summary.dims[static_cast<std::size_t>(k)];
    auto& above = summary.dims[static_cast<std::size_t>(k) + 1];

    CoboundarySource source(filtration, field, k);
    if (options.clearing && previous) source = clear_columns(*previous, std::move(source));
    dim.reduced_columns = source.owners().size();

    auto state = reduce_all(source, field, reduction);
    for (const auto& column : state.columns()) {
      dim.pairs.emplace_back(column.owner, column.pivot.entry());
      above.deaths.push_back(column.pivot.entry());
    }
    for (const auto& z : state.zeroed()) {
      if (!contains(dim.deaths, z.owner)) dim.essentials.push_back(z.owner);
    }
    std::sort(dim.pairs.begin(), dim.pairs.end(), [](const auto& a, const auto& b) {
      return filtration_less(a.second, b.second);
    });
    std::sort(above.deaths.begin(), above.deaths.end(), FiltrationLess{});
    std::sort(dim.essentials.begin(), dim.essentials.end(), FiltrationLess{});
    previous = std::move(state);
  }
  return summary;
}

BoundarySource assemble_restricted(const PhaseOneSummary& summary, int k,
                                   const Filtration& filtration, const PrimeField& field,
                                   bool truncate) {
  if (k < 0 || k > summary.max_dim + 1) {
    throw std::invalid_argument("restricted boundary matrix D_" + std::to_string(k) +
                                " not covered by the coboundary phase (max_dim " +
                                std::to_string(summary.max_dim) + ")");
  }
  const auto& dim = summary.at(k);
  std::vector<FiltrationEntry> deaths = dim.deaths;
  if (truncate) {
    std::optional<FiltrationEntry> cutoff;
    auto raise = [&](const FiltrationEntry& e) {
      if (!cutoff || filtration_less(*cutoff, e)) cutoff = e;
    };
    if (k >= 1) {
      for (const auto& [birth, death] : summary.at(k - 1).pairs) {
        if (birth.value < death.value) raise(death);
      }
    }
    if (!dim.essentials.empty()) raise(dim.essentials.back());
    std::erase_if(deaths, [&](const FiltrationEntry& e) {
      return !cutoff || filtration_less(*cutoff, e);
    });
  }
  std::vector<FiltrationEntry> owners;
  owners.reserve(deaths.size() + dim.essentials.size());
  std::merge(deaths.begin(), deaths.end(), dim.essentials.begin(), dim.essentials.end(),
             std::back_inserter(owners), FiltrationLess{});
  return BoundarySource(filtration, field, k, std::move(owners));
}

PhaseTwoResult phase_two(const PhaseOneSummary& summary, const Filtration& filtration,
                         const PrimeField& field, const PhaseTwoOptions& options) {
  const int max_dim = summary.max_dim;
  PhaseTwoResult result;
  result.restricted_columns.assign(static_cast<std::size_t>(max_dim) + 2, 0);

  // Representatives indexed like summary.at(q).pairs / .essentials.
  std::vector<std::vector<std::optional<Chain>>> pair_reps(static_cast<std::size_t>(max_dim) + 1);
  std::vector<std::vector<std::optional<Chain>>> essential_reps(static_cast<std::size_t>(max_dim) + 1);
  for (int q = 0; q <= max_dim; ++q) {
    pair_reps[static_cast<std::size_t>(q)].resize(summary.at(q).pairs.size());
    essential_reps[static_cast<std::size_t>(q)].resize(summary.at(q).essentials.size());
  }

  for (int k = 0; k <= max_dim + 1; ++k) {
    const auto source = assemble_restricted(summary, k, filtration, field, options.truncate);
    result.restricted_columns[static_cast<std::size_t>(k)] = source.owners().size();
    const auto& essentials = summary.at(k).essentials;

    ReductionOptions reduction;
    reduction.emergent = options.emergent;
    reduction.track = options.representatives && !essentials.empty();
    const auto state = reduce_all(source, field, reduction);

    std::size_t expected_pivots = 0;
    for (const auto& owner : source.owners()) {
      if (!contains(essentials, owner)) ++expected_pivots;
    }
    if (state.columns().size() != expected_pivots || state.zeroed().size() != essentials.size()) {
      throw ConsistencyError("restricted reduction of D_" + std::to_string(k) + " found " +
                             std::to_string(state.columns().size()) + " pairs and " +
                             std::to_string(state.zeroed().size()) +
                             " zero columns; coboundary phase predicts " +
                             std::to_string(expected_pivots) + " and " +
                             std::to_string(essentials.size()));
    }

    if (k >= 1) {
      const auto& pairs = summary.at(k - 1).pairs;
      std::unordered_map<Rank, std::size_t> by_death;
      by_death.reserve(pairs.size());
      for (std::size_t i = 0; i < pairs.size(); ++i) by_death.emplace(pairs[i].second.rank, i);
      for (const auto& column : state.columns()) {
        auto it = by_death.find(column.owner.rank);
        if (it == by_death.end() || pairs[it->second].first.rank != column.pivot.rank) {
          throw ConsistencyError("pair (" + std::to_string(column.pivot.rank) + ", " +
                                 std::to_string(column.owner.rank) + ") in dimension " +
                                 std::to_string(k - 1) +
                                 " disagrees with the coboundary reduction");
        }
        if (options.representatives) {
          pair_reps[static_cast<std::size_t>(k - 1)][it->second] =
              state.column_chain(column, source, field);
        }
      }
    }

    for (const auto& z : state.zeroed()) {
      auto it = std::lower_bound(essentials.begin(), essentials.end(), z.owner, FiltrationLess{});
      if (it == essentials.end() || !(*it == z.owner)) {
        throw ConsistencyError("death simplex reduced to zero in D_" + std::to_string(k));
      }
      if (options.representatives && z.record) {
        essential_reps[static_cast<std::size_t>(k)][static_cast<std::size_t>(it - essentials.begin())] =
            *z.record;
      }
    }
  }

  for (int q = 0; q <= max_dim; ++q) {
    const auto& dim = summary.at(q);
    for (std::size_t i = 0; i < dim.pairs.size(); ++i) {
      result.pairs.push_back({q, dim.pairs[i].first, dim.pairs[i].second,
                              std::move(pair_reps[static_cast<std::size_t>(q)][i])});
    }
    for (std::size_t i = 0; i < dim.essentials.size(); ++i) {
      result.pairs.push_back({q, dim.essentials[i], std::nullopt,
                              std::move(essential_reps[static_cast<std::size_t>(q)][i])});
    }
  }
  return result;
}

std::int64_t expected_death_count(std::size_t n, int k) {
  if (k < 1) throw std::invalid_argument("death counts are defined for k >= 1");
  const BinomialTable binomials(n, k);
  std::int64_t sum = 0;
  for (int i = 0; i <= k; ++i) {
    const auto term = static_cast<std::int64_t>(binomials(n, k - i));
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace phrep
