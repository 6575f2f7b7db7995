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
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "phrep/simplex.hpp"

namespace phrep {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Symmetric dissimilarity matrix with zero diagonal. The triangle inequality
/// is not required; Rips filtrations are defined for any such input.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  /// Row-major n x n entries. Throws std::invalid_argument on asymmetry, a
  /// nonzero diagonal, or negative / non-finite entries.
  DistanceMatrix(std::size_t n, std::vector<double> entries);

  /// Builds from the strict lower triangle d(1,0), d(2,0), d(2,1), d(3,0), ...
  static DistanceMatrix from_lower_triangle(std::size_t n, std::span<const double> lower);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> entries_;
};

/// A simplex together with its filtration value. Entries are totally
/// ordered by (value, dim, rank); this order is the injective filtration
/// order used by every reduction, so an entry doubles as its own position.
struct FiltrationEntry {
  double value = 0;
  Rank rank = 0;
  int dim = 0;

  Simplex simplex() const { return {dim, rank}; }
  friend bool operator==(const FiltrationEntry&, const FiltrationEntry&) = default;
};

inline bool filtration_less(const FiltrationEntry& a, const FiltrationEntry& b) {
  if (a.value != b.value) return a.value < b.value;
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.rank < b.rank;
}

struct FiltrationLess {
  bool operator()(const FiltrationEntry& a, const FiltrationEntry& b) const {
    return filtration_less(a, b);
  }
};

struct RipsConfig {
  int max_dim = 1;                 // highest homology dimension computed
  double threshold = kInfinity;    // keep simplices with diameter <= threshold
  std::uint32_t modulus = 2;

  /// Throws std::invalid_argument for max_dim < 0, a negative or NaN
  /// threshold, or a composite modulus.
  void validate() const;
};

/// max pairwise distance among the vertices of `s` (0 for a vertex).
double diameter(Simplex s, const DistanceMatrix& d, const BinomialTable& binomials);

/// The simplices of a filtered complex through dimension `top_dim`, with
/// implicit facet/cofacet enumeration. Either a Vietoris-Rips filtration of
/// a distance matrix or an explicit assignment of values to vertex sets.
class Filtration {
 public:
  /// Rips complex up to dimension cfg.max_dim + 1 (needed to kill
  /// max_dim-classes).
  static Filtration rips(DistanceMatrix distances, const RipsConfig& cfg);

  /// Explicit filtration of a complex on `n` vertices. Every face of a listed
  /// simplex must be listed with a value no larger than the simplex's.
  /// Ties are broken by (dim, rank) like in the Rips case.
  static Filtration explicit_values(std::size_t n, int top_dim,
                                    std::span<const std::pair<std::vector<Vertex>, double>> simplices);

  bool is_rips() const { return distances_.has_value(); }
  std::size_t vertex_count() const { return n_; }
  int top_dim() const { return top_dim_; }
  double threshold() const { return threshold_; }
  const BinomialTable& binomials() const { return binomials_; }
  const DistanceMatrix* distances() const { return distances_ ? &*distances_ : nullptr; }

  /// Entry for `s`, or nullopt when `s` is not in the complex.
  std::optional<FiltrationEntry> entry(Simplex s) const;
  std::optional<FiltrationEntry> entry(std::span<const Vertex> vertices) const;

  std::vector<Vertex> vertices(Simplex s) const { return decode(s, n_, binomials_); }

  /// All dim-simplices in the complex, ascending filtration order.
  std::vector<FiltrationEntry> simplices(int dim) const;

  /// Number of dim-simplices in the complex without materializing them
  /// (closed form for an unbounded Rips filtration).
  std::uint64_t count(int dim) const;

  /// fn(const FiltrationEntry& facet, bool odd) for every facet.
  template <class Fn>
  void for_each_facet(const FiltrationEntry& e, std::vector<Vertex>& scratch, Fn&& fn) const;

  /// fn(const FiltrationEntry& cofacet, bool odd) for every cofacet present
  /// in the complex. Requires e.dim < top_dim().
  template <class Fn>
  void for_each_cofacet(const FiltrationEntry& e, std::vector<Vertex>& scratch, Fn&& fn) const;

 private:
  Filtration(std::size_t n, int top_dim);

  template <class Fn>
  void for_each_rips_simplex(int dim, Fn&& fn) const;

  std::size_t n_ = 0;
  int top_dim_ = 0;
  double threshold_ = kInfinity;
  BinomialTable binomials_;
  std::optional<DistanceMatrix> distances_;
  std::vector<std::unordered_map<Rank, double>> explicit_;  // per dimension
};

template <class Fn>
void Filtration::for_each_facet(const FiltrationEntry& e, std::vector<Vertex>& scratch,
                                Fn&& fn) const {
  if (e.dim == 0) return;
  decode_into(e.simplex(), n_, binomials_, scratch);
  std::vector<Vertex>& v = scratch;
  phrep::for_each_facet(v, binomials_, [&](Rank rank, bool odd, std::size_t omitted) {
    FiltrationEntry facet{0, rank, e.dim - 1};
    if (distances_) {
      const auto& d = *distances_;
      double diam = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i == omitted) continue;
        for (std::size_t j = i + 1; j < v.size(); ++j) {
          if (j == omitted) continue;
          diam = std::max(diam, d(v[i], v[j]));
        }
      }
      facet.value = diam;
    } else {
      facet.value = explicit_[static_cast<std::size_t>(e.dim - 1)].at(rank);
    }
    fn(facet, odd);
  });
}

template <class Fn>
void Filtration::for_each_cofacet(const FiltrationEntry& e, std::vector<Vertex>& scratch,
                                  Fn&& fn) const {
  decode_into(e.simplex(), n_, binomials_, scratch);
  const std::vector<Vertex>& v = scratch;
  if (distances_) {
    const auto& d = *distances_;
    phrep::for_each_cofacet(v, n_, binomials_, [&](Rank rank, bool odd, Vertex added) {
      double diam = e.value;
      for (Vertex u : v) diam = std::max(diam, d(u, added));
      if (diam <= threshold_) fn(FiltrationEntry{diam, rank, e.dim + 1}, odd);
    });
  } else {
    const auto& values = explicit_[static_cast<std::size_t>(e.dim + 1)];
    phrep::for_each_cofacet(v, n_, binomials_, [&](Rank rank, bool odd, Vertex) {
      if (auto it = values.find(rank); it != values.end()) {
        fn(FiltrationEntry{it->second, rank, e.dim + 1}, odd);
      }
    });
  }
}

/// The dim-simplices of the Rips filtration of `d` in filtration order.
std::vector<FiltrationEntry> enumerate_filtration(const DistanceMatrix& d, const RipsConfig& cfg,
                                                  int dim);

}  // namespace phrep
