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

#include "phrep/filtration.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "phrep/field.hpp"

namespace phrep {

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) {
    throw std::invalid_argument("distance matrix needs " + std::to_string(n * n) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if ((*this)(i, i) != 0) {
      throw std::invalid_argument("distance matrix diagonal entry " + std::to_string(i) +
                                  " is nonzero");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const double v = (*this)(i, j);
      if (!std::isfinite(v) || v < 0) {
        throw std::invalid_argument("distance d(" + std::to_string(i) + "," + std::to_string(j) +
                                    ") must be finite and non-negative");
      }
      if (v != (*this)(j, i)) {
        throw std::invalid_argument("distance matrix is not symmetric at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
      }
    }
  }
}

DistanceMatrix DistanceMatrix::from_lower_triangle(std::size_t n, std::span<const double> lower) {
  if (lower.size() != n * (n - (n > 0 ? 1 : 0)) / 2) {
    throw std::invalid_argument("lower triangle of a " + std::to_string(n) + "-point matrix needs " +
                                std::to_string(n * (n > 0 ? n - 1 : 0) / 2) + " entries");
  }
  std::vector<double> full(n * n, 0.0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j, ++k) {
      full[i * n + j] = lower[k];
      full[j * n + i] = lower[k];
    }
  }
  return DistanceMatrix(n, std::move(full));
}

void RipsConfig::validate() const {
  if (max_dim < 0) throw std::invalid_argument("max_dim must be non-negative");
  if (std::isnan(threshold) || threshold < 0) {
    throw std::invalid_argument("threshold must be non-negative");
  }
  if (!is_prime(modulus)) {
    throw std::invalid_argument("modulus " + std::to_string(modulus) + " is not prime");
  }
}

double diameter(Simplex s, const DistanceMatrix& d, const BinomialTable& binomials) {
  const auto v = decode(s, d.size(), binomials);
  double diam = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) diam = std::max(diam, d(v[i], v[j]));
  }
  return diam;
}

Filtration::Filtration(std::size_t n, int top_dim)
    : n_(n), top_dim_(top_dim), binomials_(n, top_dim + 2) {}

Filtration Filtration::rips(DistanceMatrix distances, const RipsConfig& cfg) {
  cfg.validate();
  Filtration f(distances.size(), cfg.max_dim + 1);
  f.threshold_ = cfg.threshold;
  f.distances_ = std::move(distances);
  return f;
}

Filtration Filtration::explicit_values(
    std::size_t n, int top_dim, std::span<const std::pair<std::vector<Vertex>, double>> simplices) {
  if (top_dim < 0) throw std::invalid_argument("top_dim must be non-negative");
  Filtration f(n, top_dim);
  f.explicit_.resize(static_cast<std::size_t>(top_dim) + 1);
  for (const auto& [vertices, value] : simplices) {
    const auto s = encode(vertices, n, f.binomials_);
    if (s.dim > top_dim) {
      throw std::invalid_argument("simplex of dimension " + std::to_string(s.dim) +
                                  " exceeds top dimension " + std::to_string(top_dim));
    }
    if (!std::isfinite(value)) throw std::invalid_argument("filtration values must be finite");
    if (!f.explicit_[static_cast<std::size_t>(s.dim)].emplace(s.rank, value).second) {
      throw std::invalid_argument("simplex listed twice in explicit filtration");
    }
  }
  std::vector<Vertex> scratch;
  for (int dim = 1; dim <= top_dim; ++dim) {
    for (const auto& [rank, value] : f.explicit_[static_cast<std::size_t>(dim)]) {
      decode_into({dim, rank}, n, f.binomials_, scratch);
      phrep::for_each_facet(scratch, f.binomials_, [&](Rank facet, bool, std::size_t) {
        const auto& lower = f.explicit_[static_cast<std::size_t>(dim - 1)];
        auto it = lower.find(facet);
        if (it == lower.end() || it->second > value) {
          throw std::invalid_argument("explicit filtration is not closed under faces");
        }
      });
    }
  }
  return f;
}

std::optional<FiltrationEntry> Filtration::entry(Simplex s) const {
  if (s.dim < 0 || s.dim > top_dim_ || static_cast<std::size_t>(s.dim) >= n_ ||
      s.rank >= binomials_(n_, s.dim + 1)) {
    return std::nullopt;
  }
  if (distances_) {
    const double diam = diameter(s, *distances_, binomials_);
    if (diam > threshold_) return std::nullopt;
    return FiltrationEntry{diam, s.rank, s.dim};
  }
  const auto& values = explicit_[static_cast<std::size_t>(s.dim)];
  if (auto it = values.find(s.rank); it != values.end()) {
    return FiltrationEntry{it->second, s.rank, s.dim};
  }
  return std::nullopt;
}

std::optional<FiltrationEntry> Filtration::entry(std::span<const Vertex> vertices) const {
  return entry(encode(vertices, n_, binomials_));
}

template <class Fn>
void Filtration::for_each_rips_simplex(int dim, Fn&& fn) const {
  // Depth-first over increasing vertex tuples, pruning by the threshold.
  const auto& d = *distances_;
  const auto size = static_cast<std::size_t>(dim) + 1;
  std::vector<Vertex> stack(size);
  std::vector<double> diam(size, 0.0);
  std::size_t depth = 0;
  stack[0] = 0;
  while (true) {
    if (stack[depth] >= n_) {
      if (depth == 0) return;
      --depth;
      ++stack[depth];
      continue;
    }
    double value = 0;
    if (depth > 0) {
      value = diam[depth - 1];
      for (std::size_t i = 0; i < depth; ++i) value = std::max(value, d(stack[i], stack[depth]));
    }
    if (value > threshold_) {
      ++stack[depth];
      continue;
    }
    diam[depth] = value;
    if (depth + 1 == size) {
      Rank rank = 0;
      for (std::size_t j = 0; j < size; ++j) rank += binomials_(stack[j], static_cast<int>(j + 1));
      fn(FiltrationEntry{value, rank, dim});
      ++stack[depth];
    } else {
      stack[depth + 1] = stack[depth] + 1;
      ++depth;
    }
  }
}

std::vector<FiltrationEntry> Filtration::simplices(int dim) const {
  std::vector<FiltrationEntry> out;
  if (dim < 0 || dim > top_dim_ || static_cast<std::size_t>(dim) >= n_) return out;
  if (distances_) {
    if (threshold_ == kInfinity) out.reserve(binomials_(n_, dim + 1));
    for_each_rips_simplex(dim, [&](const FiltrationEntry& e) { out.push_back(e); });
  } else {
    for (const auto& [rank, value] : explicit_[static_cast<std::size_t>(dim)]) {
      out.push_back({value, rank, dim});
    }
  }
  std::sort(out.begin(), out.end(), FiltrationLess{});
  return out;
}

std::uint64_t Filtration::count(int dim) const {
  if (dim < 0 || dim > top_dim_ || static_cast<std::size_t>(dim) >= n_) return 0;
  if (distances_) {
    if (threshold_ == kInfinity) return binomials_(n_, dim + 1);
    std::uint64_t c = 0;
    for_each_rips_simplex(dim, [&](const FiltrationEntry&) { ++c; });
    return c;
  }
  return explicit_[static_cast<std::size_t>(dim)].size();
}

std::vector<FiltrationEntry> enumerate_filtration(const DistanceMatrix& d, const RipsConfig& cfg,
                                                  int dim) {
  if (dim > cfg.max_dim + 1) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " beyond max_dim + 1");
  }
  return Filtration::rips(d, cfg).simplices(dim);
}

}  // namespace phrep
