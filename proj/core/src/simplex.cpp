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

#include "phrep/simplex.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace phrep {

BinomialTable::BinomialTable(std::size_t max_n, int max_k)
    : max_n_(max_n), max_k_(max_k), stride_(static_cast<std::size_t>(max_k) + 1) {
  if (max_k < 0) throw std::invalid_argument("binomial table needs max_k >= 0");
  constexpr Rank kLimit = Rank{1} << 63;
  table_.assign((max_n + 1) * stride_, 0);
  for (std::size_t i = 0; i <= max_n; ++i) {
    table_[i * stride_] = 1;
    for (int j = 1; j <= max_k && j <= static_cast<int>(i); ++j) {
      const Rank a = table_[(i - 1) * stride_ + static_cast<std::size_t>(j - 1)];
      const Rank b = j <= static_cast<int>(i - 1) ? table_[(i - 1) * stride_ + static_cast<std::size_t>(j)] : 0;
      if (a >= kLimit - b) {
        throw std::overflow_error("binomial coefficient C(" + std::to_string(i) + ", " +
                                  std::to_string(j) + ") exceeds the simplex index range");
      }
      table_[i * stride_ + static_cast<std::size_t>(j)] = a + b;
    }
  }
}

Rank BinomialTable::at(std::size_t i, int j) const {
  if (i > max_n_ || j < 0 || j > max_k_) {
    throw std::out_of_range("binomial C(" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside table of size " + std::to_string(max_n_) + " x " +
                            std::to_string(max_k_));
  }
  return (*this)(i, j);
}

Simplex encode(std::span<const Vertex> vertices, std::size_t n, const BinomialTable& binomials) {
  if (vertices.empty()) throw std::invalid_argument("a simplex needs at least one vertex");
  Rank rank = 0;
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if (vertices[j] >= n) {
      throw std::invalid_argument("vertex " + std::to_string(vertices[j]) + " out of range for " +
                                  std::to_string(n) + " points");
    }
    if (j > 0 && vertices[j] <= vertices[j - 1]) {
      throw std::invalid_argument("simplex vertices must be strictly increasing");
    }
    rank += binomials.at(vertices[j], static_cast<int>(j + 1));
  }
  return {static_cast<int>(vertices.size()) - 1, rank};
}

void decode_into(Simplex s, std::size_t n, const BinomialTable& binomials,
                 std::vector<Vertex>& out) {
  out.resize(static_cast<std::size_t>(s.dim) + 1);
  Rank rank = s.rank;
  std::size_t upper = n;  // exclusive bound on the next vertex
  for (int j = s.dim; j >= 0; --j) {
    // largest v < upper with C(v, j + 1) <= rank
    std::size_t lo = static_cast<std::size_t>(j), hi = upper - 1;
    while (lo < hi) {
      const auto mid = lo + (hi - lo + 1) / 2;
      if (binomials(mid, j + 1) <= rank) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    out[static_cast<std::size_t>(j)] = static_cast<Vertex>(lo);
    rank -= binomials(lo, j + 1);
    upper = lo;
  }
}

std::vector<Vertex> decode(Simplex s, std::size_t n, const BinomialTable& binomials) {
  if (s.dim < 0 || static_cast<std::size_t>(s.dim) >= n || s.rank >= binomials.at(n, s.dim + 1)) {
    throw std::invalid_argument("simplex rank " + std::to_string(s.rank) + " out of range for dim " +
                                std::to_string(s.dim) + " over " + std::to_string(n) + " vertices");
  }
  std::vector<Vertex> out;
  decode_into(s, n, binomials, out);
  return out;
}

std::vector<Incidence> facets(Simplex s, std::size_t n, const BinomialTable& binomials) {
  std::vector<Incidence> out;
  if (s.dim == 0) return out;
  const auto vertices = decode(s, n, binomials);
  out.reserve(vertices.size());
  for_each_facet(vertices, binomials, [&](Rank rank, bool odd, std::size_t) {
    out.push_back({{s.dim - 1, rank}, odd});
  });
  return out;
}

std::vector<Incidence> cofacets(Simplex s, std::size_t n, const BinomialTable& binomials) {
  const auto vertices = decode(s, n, binomials);
  if (static_cast<int>(binomials.max_k()) < s.dim + 2) {
    throw std::out_of_range("binomial table too small for cofacets of dimension " +
                            std::to_string(s.dim));
  }
  std::vector<Incidence> out;
  if (vertices.size() < n) out.reserve(n - vertices.size());
  for_each_cofacet(vertices, n, binomials, [&](Rank rank, bool odd, Vertex) {
    out.push_back({{s.dim + 1, rank}, odd});
  });
  return out;
}

}  // namespace phrep
