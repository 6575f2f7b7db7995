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

#include "phrep/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace phrep::gen {

DistanceMatrix cycle_graph(std::size_t n) {
  std::vector<double> entries(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      entries[i * n + j] = static_cast<double>(std::min(gap, n - gap));
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

PointCloud uniform_cube(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  PointCloud points(n, std::vector<double>(dim));
  for (auto& p : points) {
    for (auto& c : p) c = unit(rng);
  }
  return points;
}

PointCloud random_circle(std::size_t n, double radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  PointCloud points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = angle(rng);
    points.push_back({radius * std::cos(t), radius * std::sin(t)});
  }
  return points;
}

PointCloud regular_circle(std::size_t n, double radius) {
  PointCloud points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    points.push_back({radius * std::cos(t), radius * std::sin(t)});
  }
  return points;
}

PointCloud annulus(std::size_t n, double inner, double outer, std::uint64_t seed) {
  if (inner < 0 || outer < inner) throw std::invalid_argument("annulus needs 0 <= inner <= outer");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> area(inner * inner, outer * outer);
  PointCloud points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = angle(rng);
    const double r = std::sqrt(area(rng));
    points.push_back({r * std::cos(t), r * std::sin(t)});
  }
  return points;
}

DistanceMatrix euclidean(const PointCloud& points) {
  const std::size_t n = points.size();
  std::vector<double> entries(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (points[i].size() != points[0].size()) throw std::invalid_argument("ragged point cloud");
    for (std::size_t j = 0; j < i; ++j) {
      double sum = 0;
      for (std::size_t k = 0; k < points[i].size(); ++k) {
        const double diff = points[i][k] - points[j][k];
        sum += diff * diff;
      }
      entries[i * n + j] = entries[j * n + i] = std::sqrt(sum);
    }
  }
  return DistanceMatrix(n, std::move(entries));
}

}  // namespace phrep::gen
