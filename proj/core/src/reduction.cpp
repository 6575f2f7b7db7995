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

#include "phrep/reduction.hpp"

namespace phrep {

CoboundarySource::CoboundarySource(const Filtration& filtration, const PrimeField& field, int dim)
    : filtration_(&filtration), field_(&field), dim_(dim), owners_(filtration.simplices(dim)) {
  if (dim >= filtration.top_dim()) {
    throw std::invalid_argument("coboundary columns need dimension below the top dimension");
  }
  std::reverse(owners_.begin(), owners_.end());
}

void CoboundarySource::column(const FiltrationEntry& owner, std::vector<Term>& out) const {
  filtration_->for_each_cofacet(owner, scratch_, [&](const FiltrationEntry& cofacet, bool odd) {
    out.emplace_back(cofacet, field_->sign(odd));
  });
}

BoundarySource::BoundarySource(const Filtration& filtration, const PrimeField& field, int dim)
    : BoundarySource(filtration, field, dim, filtration.simplices(dim)) {}

BoundarySource::BoundarySource(const Filtration& filtration, const PrimeField& field, int dim,
                               std::vector<FiltrationEntry> owners)
    : filtration_(&filtration), field_(&field), dim_(dim), owners_(std::move(owners)) {
  for (const auto& e : owners_) {
    if (e.dim != dim) throw std::invalid_argument("boundary column owner has the wrong dimension");
  }
}

void BoundarySource::column(const FiltrationEntry& owner, std::vector<Term>& out) const {
  filtration_->for_each_facet(owner, scratch_, [&](const FiltrationEntry& facet, bool odd) {
    out.emplace_back(facet, field_->sign(odd));
  });
}

std::vector<std::pair<FiltrationEntry, FiltrationEntry>> ReductionState::pivot_pairs() const {
  std::vector<std::pair<FiltrationEntry, FiltrationEntry>> out;
  out.reserve(columns_.size());
  for (const auto& c : columns_) out.emplace_back(c.pivot.entry(), c.owner);
  return out;
}

Chain ReductionState::record_chain(const ReducedColumn& c) const {
  if (!c.implicit) return c.record;
  return Chain::single(c.owner, 1);
}

}  // namespace phrep
