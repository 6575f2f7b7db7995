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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace phrep {

using Vertex = std::uint32_t;
using Rank = std::uint64_t;

/// A dim-simplex identified by the colex rank of its vertex set,
/// rank = sum_j C(v_j, j + 1) over the ascending vertices v_0 < ... < v_dim.
struct Simplex {
  int dim = 0;
  Rank rank = 0;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

/// Exact table of C(i, j) for 0 <= i <= max_n and 0 <= j <= max_k.
/// Construction fails with std::overflow_error if an entry exceeds 2^63.
class BinomialTable {
 public:
  BinomialTable(std::size_t max_n, int max_k);

  Rank operator()(std::size_t i, int j) const {
    return j > static_cast<int>(i) ? 0 : table_[i * stride_ + static_cast<std::size_t>(j)];
  }
  /// Bounds-checked lookup; throws std::out_of_range past the table.
  Rank at(std::size_t i, int j) const;

  std::size_t max_n() const { return max_n_; }
  int max_k() const { return max_k_; }

 private:
  std::size_t max_n_;
  int max_k_;
  std::size_t stride_;
  std::vector<Rank> table_;
};

/// Oriented incidence: `simplex` appears with sign (-1)^odd.
struct Incidence {
  Simplex simplex;
  bool odd = false;

  friend bool operator==(const Incidence&, const Incidence&) = default;
};

/// Throws std::invalid_argument unless the vertices are strictly increasing
/// and below `n`, and std::out_of_range when the table is too small.
Simplex encode(std::span<const Vertex> vertices, std::size_t n, const BinomialTable& binomials);

/// Throws std::invalid_argument when rank >= C(n, dim + 1).
std::vector<Vertex> decode(Simplex s, std::size_t n, const BinomialTable& binomials);

/// Allocation-free decode for hot loops; no range validation.
void decode_into(Simplex s, std::size_t n, const BinomialTable& binomials,
                 std::vector<Vertex>& out);

/// One column of the boundary matrix: the j-th omitted vertex carries (-1)^j.
std::vector<Incidence> facets(Simplex s, std::size_t n, const BinomialTable& binomials);

/// All (dim+1)-simplices containing `s` over n vertices, with the sign `s`
/// carries in their boundary. Ordered by ascending inserted vertex.
std::vector<Incidence> cofacets(Simplex s, std::size_t n, const BinomialTable& binomials);

/// Visits facets of the simplex with ascending vertices `vertices`.
/// `fn(Rank facet_rank, bool odd, std::size_t omitted_index)`.
template <class Fn>
void for_each_facet(std::span<const Vertex> vertices, const BinomialTable& binomials, Fn&& fn) {
  const auto k = vertices.size();
  if (k < 2) return;
  // rank of the facet omitting index j: vertices below j keep their slot,
  // vertices above j move down one slot.
  Rank above = 0;
  for (std::size_t i = 1; i < k; ++i) above += binomials(vertices[i], static_cast<int>(i));
  Rank below = 0;
  for (std::size_t j = 0; j < k; ++j) {
    fn(below + above, (j % 2) == 1, j);
    if (j + 1 < k) {
      above -= binomials(vertices[j + 1], static_cast<int>(j + 1));
      below += binomials(vertices[j], static_cast<int>(j + 1));
    }
  }
}

/// Visits cofacets obtained by inserting each vertex `v` < n not in `vertices`.
/// `fn(Rank cofacet_rank, bool odd, Vertex inserted)`.
template <class Fn>
void for_each_cofacet(std::span<const Vertex> vertices, std::size_t n,
                      const BinomialTable& binomials, Fn&& fn) {
  const auto k = vertices.size();
  // Inserting v at slot `slot` shifts every vertex above it up one slot.
  Rank below = 0;
  Rank above = 0;
  for (std::size_t i = 0; i < k; ++i) above += binomials(vertices[i], static_cast<int>(i + 2));
  std::size_t slot = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (slot < k && vertices[slot] == v) {
      above -= binomials(v, static_cast<int>(slot + 2));
      below += binomials(v, static_cast<int>(slot + 1));
      ++slot;
      continue;
    }
    fn(below + binomials(v, static_cast<int>(slot + 1)) + above, (slot % 2) == 1, v);
  }
}

}  // namespace phrep
