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

#include "phrep/chain.hpp"

#include <algorithm>

namespace phrep {

Chain Chain::from_terms(std::vector<Term> terms, const PrimeField& field) {
  std::sort(terms.begin(), terms.end(), term_less);
  Chain out;
  out.terms_.reserve(terms.size());
  for (const auto& t : terms) {
    const auto c = t.coeff % field.modulus();
    if (!out.terms_.empty() && same_simplex(out.terms_.back(), t)) {
      out.terms_.back().coeff = field.add(out.terms_.back().coeff, c);
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (c != 0) {
      out.terms_.push_back(t);
      out.terms_.back().coeff = c;
    }
  }
  return out;
}

Coefficient Chain::coefficient(const FiltrationEntry& e) const {
  const Term probe(e, 0);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), probe, term_less);
  return it != terms_.end() && same_simplex(*it, probe) ? it->coeff : 0;
}

void Chain::add_scaled(const Chain& other, Coefficient scale, const PrimeField& field) {
  if (scale == 0 || other.empty()) return;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && term_less(*a, *b))) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || term_less(*b, *a)) {
      merged.push_back(*b);
      merged.back().coeff = field.multiply(b->coeff, scale);
      ++b;
    } else {
      const auto c = field.add(a->coeff, field.multiply(b->coeff, scale));
      if (c != 0) {
        merged.push_back(*a);
        merged.back().coeff = c;
      }
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

Chain boundary(const Chain& chain, const Filtration& filtration, const PrimeField& field) {
  std::vector<Term> out;
  std::vector<Vertex> scratch;
  for (const auto& t : chain.terms()) {
    filtration.for_each_facet(t.entry(), scratch, [&](const FiltrationEntry& facet, bool odd) {
      out.emplace_back(facet, field.multiply(t.coeff, field.sign(odd)));
    });
  }
  return Chain::from_terms(std::move(out), field);
}

}  // namespace phrep
