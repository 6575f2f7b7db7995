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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "phrep/filtration.hpp"

namespace phrep::gen {

using PointCloud = std::vector<std::vector<double>>;

/// All-pairs shortest-path metric of the unweighted n-cycle:
/// d(i, j) = min(|i - j|, n - |i - j|).
DistanceMatrix cycle_graph(std::size_t n);

/// n points uniform in [0,1]^dim.
PointCloud uniform_cube(std::size_t n, std::size_t dim, std::uint64_t seed);

/// n points at uniformly random angles on a circle of the given radius.
PointCloud random_circle(std::size_t n, double radius, std::uint64_t seed);

/// n equally spaced points on a circle.
PointCloud regular_circle(std::size_t n, double radius);

/// n points uniform (by area) in the annulus inner <= r <= outer.
PointCloud annulus(std::size_t n, double inner, double outer, std::uint64_t seed);

DistanceMatrix euclidean(const PointCloud& points);

}  // namespace phrep::gen
