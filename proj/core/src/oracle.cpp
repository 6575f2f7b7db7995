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

#include "phrep/oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "phrep/errors.hpp"

namespace phrep::oracle {

namespace {

using Tuple = std::vector<Vertex>;

// Simplices of one dimension, sorted by filtration order.
struct Layer {
  std::vector<Tuple> tuples;
  std::vector<FiltrationEntry> entries;
  std::map<Tuple, std::size_t> index;
};

template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k == 0 || k > n) return;
  Tuple t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = static_cast<Vertex>(i);
  while (true) {
    fn(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
}

void check_cap(const Filtration& filtration, std::size_t cap) {
  std::size_t total = 0;
  for (int dim = 0; dim <= filtration.top_dim(); ++dim) total += filtration.count(dim);
  if (total > cap) {
    throw CapacityError("dense oracle refuses " + std::to_string(total) +
                        " simplices (cap " + std::to_string(cap) + ")");
  }
}

Layer build_layer(const Filtration& filtration, int dim) {
  std::vector<std::pair<FiltrationEntry, Tuple>> found;
  for_each_combination(filtration.vertex_count(), static_cast<std::size_t>(dim) + 1,
                       [&](const Tuple& t) {
                         if (auto e = filtration.entry(t)) found.emplace_back(*e, t);
                       });
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return filtration_less(a.first, b.first); });
  Layer layer;
  for (auto& [e, t] : found) {
    layer.index.emplace(t, layer.entries.size());
    layer.entries.push_back(e);
    layer.tuples.push_back(std::move(t));
  }
  return layer;
}

DenseMatrix assemble(const Layer& rows, const Layer& cols, const PrimeField& field) {
  DenseMatrix m{rows.entries, cols.entries, {}};
  m.entries.assign(rows.entries.size() * cols.entries.size(), 0);
  for (std::size_t c = 0; c < cols.tuples.size(); ++c) {
    const Tuple& t = cols.tuples[c];
    for (std::size_t j = 0; j < t.size(); ++j) {
      Tuple facet;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i != j) facet.push_back(t[i]);
      }
      auto it = rows.index.find(facet);
      if (it == rows.index.end()) throw std::logic_error("filtration is not closed under faces");
      m.at(it->second, c) = field.sign(j % 2 == 1);
    }
  }
  return m;
}

std::optional<std::size_t> low(const DenseMatrix& m, std::size_t c) {
  for (std::size_t r = m.rows.size(); r-- > 0;) {
    if (m.at(r, c) != 0) return r;
  }
  return std::nullopt;
}

// col(target) -= lambda * col(source), for a matrix with `rows` rows.
void subtract_column(std::vector<Coefficient>& entries, std::size_t rows, std::size_t cols,
                     std::size_t target, std::size_t source, Coefficient lambda,
                     const PrimeField& field) {
  for (std::size_t r = 0; r < rows; ++r) {
    auto& t = entries[r * cols + target];
    t = field.subtract(t, field.multiply(lambda, entries[r * cols + source]));
  }
}

Chain column_chain(const DenseMatrix& m, std::size_t c, const PrimeField& field) {
  std::vector<Term> terms;
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    if (m.at(r, c) != 0) terms.emplace_back(m.rows[r], m.at(r, c));
  }
  return Chain::from_terms(std::move(terms), field);
}

}  // namespace

std::vector<FiltrationEntry> filtration_order(const Filtration& filtration, std::size_t cap) {
  check_cap(filtration, cap);
  std::vector<FiltrationEntry> order;
  for (int dim = 0; dim <= filtration.top_dim(); ++dim) {
    const auto layer = build_layer(filtration, dim);
    order.insert(order.end(), layer.entries.begin(), layer.entries.end());
  }
  std::sort(order.begin(), order.end(), FiltrationLess{});
  return order;
}

DenseMatrix boundary_matrix(const Filtration& filtration, const PrimeField& field, int dim,
                            std::size_t cap) {
  check_cap(filtration, cap);
  if (dim < 1 || dim > filtration.top_dim()) {
    throw std::invalid_argument("boundary matrix dimension out of range");
  }
  return assemble(build_layer(filtration, dim - 1), build_layer(filtration, dim), field);
}

OracleResult full_reduce(const Filtration& filtration, const PrimeField& field, std::size_t cap) {
  check_cap(filtration, cap);
  const int top = filtration.top_dim();
  const int max_dim = top - 1;

  std::vector<Layer> layers;
  for (int dim = 0; dim <= top; ++dim) layers.push_back(build_layer(filtration, dim));

  OracleResult result;
  for (const auto& layer : layers) {
    result.order.insert(result.order.end(), layer.entries.begin(), layer.entries.end());
  }
  std::sort(result.order.begin(), result.order.end(), FiltrationLess{});
  result.reduced.resize(static_cast<std::size_t>(top) + 1);

  // paired_rows[q][i]: q-simplex i is the birth of some pair.
  std::vector<std::vector<bool>> paired_rows(static_cast<std::size_t>(top) + 1);
  std::vector<std::vector<bool>> zero_columns(static_cast<std::size_t>(top) + 1);
  std::vector<std::vector<Coefficient>> records(static_cast<std::size_t>(top) + 1);
  for (int q = 0; q <= top; ++q) {
    paired_rows[static_cast<std::size_t>(q)].assign(layers[static_cast<std::size_t>(q)].entries.size(), false);
    zero_columns[static_cast<std::size_t>(q)].assign(layers[static_cast<std::size_t>(q)].entries.size(), q == 0);
  }

  for (int p = 1; p <= top; ++p) {
    const auto& rows = layers[static_cast<std::size_t>(p - 1)];
    const auto& cols = layers[static_cast<std::size_t>(p)];
    DenseMatrix m = assemble(rows, cols, field);
    const std::size_t nr = m.rows.size(), nc = m.cols.size();

    // Reduction matrix V, identity-seeded; only where essentials can live.
    const bool track = p <= max_dim;
    std::vector<Coefficient>& v = records[static_cast<std::size_t>(p)];
    if (track) {
      v.assign(nc * nc, 0);
      for (std::size_t c = 0; c < nc; ++c) v[c * nc + c] = 1;
    }

    std::vector<std::optional<std::size_t>> owner_of_low(nr);
    for (std::size_t c = 0; c < nc; ++c) {
      auto l = low(m, c);
      while (l && owner_of_low[*l]) {
        const std::size_t j = *owner_of_low[*l];
        const Coefficient lambda = field.divide(m.at(*l, c), m.at(*l, j));
        subtract_column(m.entries, nr, nc, c, j, lambda, field);
        if (track) subtract_column(v, nc, nc, c, j, lambda, field);
        l = low(m, c);
      }
      if (l) {
        owner_of_low[*l] = c;
        paired_rows[static_cast<std::size_t>(p - 1)][*l] = true;
        result.pairs.push_back({p - 1, m.rows[*l], m.cols[c], column_chain(m, c, field)});
      } else {
        zero_columns[static_cast<std::size_t>(p)][c] = true;
      }
    }
    result.reduced[static_cast<std::size_t>(p)] = std::move(m);
  }

  for (int q = 0; q <= max_dim; ++q) {
    const auto& layer = layers[static_cast<std::size_t>(q)];
    const std::size_t nc = layer.entries.size();
    for (std::size_t c = 0; c < nc; ++c) {
      if (!zero_columns[static_cast<std::size_t>(q)][c] || paired_rows[static_cast<std::size_t>(q)][c]) continue;
      Chain rep;
      if (q == 0) {
        rep = Chain::single(layer.entries[c], 1);
      } else {
        std::vector<Term> terms;
        const auto& v = records[static_cast<std::size_t>(q)];
        for (std::size_t r = 0; r < nc; ++r) {
          if (v[r * nc + c] != 0) terms.emplace_back(layer.entries[r], v[r * nc + c]);
        }
        rep = Chain::from_terms(std::move(terms), field);
      }
      result.pairs.push_back({q, layer.entries[c], std::nullopt, std::move(rep)});
    }
  }
  return result;
}

bool in_boundary_span(const Chain& chain, int dim, const FiltrationEntry& limit,
                      const Filtration& filtration, const PrimeField& field, std::size_t cap) {
  if (chain.empty()) return true;
  check_cap(filtration, cap);
  if (dim + 1 > filtration.top_dim()) {
    throw std::invalid_argument("no boundaries above the top dimension");
  }
  const Layer rows = build_layer(filtration, dim);
  Layer cols = build_layer(filtration, dim + 1);
  while (!cols.entries.empty() && filtration_less(limit, cols.entries.back())) {
    cols.index.erase(cols.tuples.back());
    cols.tuples.pop_back();
    cols.entries.pop_back();
  }
  DenseMatrix m = assemble(rows, cols, field);
  const std::size_t nr = m.rows.size(), nc = m.cols.size();

  // Target vector as one extra column appended after elimination.
  std::vector<Coefficient> target(nr, 0);
  for (const auto& t : chain.terms()) {
    auto it = std::lower_bound(rows.entries.begin(), rows.entries.end(), t.entry(), FiltrationLess{});
    if (it == rows.entries.end() || !(*it == t.entry())) return false;
    target[static_cast<std::size_t>(it - rows.entries.begin())] = t.coeff;
  }

  std::vector<std::optional<std::size_t>> owner_of_low(nr);
  for (std::size_t c = 0; c < nc; ++c) {
    auto l = low(m, c);
    while (l && owner_of_low[*l]) {
      const std::size_t j = *owner_of_low[*l];
      subtract_column(m.entries, nr, nc, c, j, field.divide(m.at(*l, c), m.at(*l, j)), field);
      l = low(m, c);
    }
    if (l) owner_of_low[*l] = c;
  }
  for (std::size_t r = nr; r-- > 0;) {
    if (target[r] == 0) continue;
    if (!owner_of_low[r]) return false;
    const std::size_t j = *owner_of_low[r];
    const Coefficient lambda = field.divide(target[r], m.at(r, j));
    for (std::size_t i = 0; i <= r; ++i) {
      target[i] = field.subtract(target[i], field.multiply(lambda, m.at(i, j)));
    }
  }
  return true;
}

}  // namespace phrep::oracle
