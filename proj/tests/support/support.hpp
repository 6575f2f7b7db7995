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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "phrep/chain.hpp"
#include "phrep/field.hpp"
#include "phrep/filtration.hpp"
#include "phrep/involuted.hpp"

namespace phrep::testing {

struct Instance {
  std::string name;
  DistanceMatrix distances;
  RipsConfig cfg;
};

/// Seeded random clouds in the unit square or cube with n <= 10, max_dim <= 2,
/// p in {2, 3, 5} and threshold either unbounded or the median distance.
std::vector<Instance> random_instances(std::size_t count, std::uint64_t seed);

double median_distance(const DistanceMatrix& d);

struct Bar {
  int dim = 0;
  double birth = 0;
  double death = 0;  // kInfinity for essential classes
  auto operator<=>(const Bar&) const = default;
};

/// Sorted (dim, birth, death) multiset.
std::vector<Bar> bars(const std::vector<PersistencePair>& pairs);

/// Persistence bars from a self-contained reduction over explicit vertex
/// tuples. Shares no code with the library beyond DistanceMatrix access.
std::vector<Bar> naive_bars(const DistanceMatrix& d, const RipsConfig& cfg);

/// The four-point tetrahedron with the triangle order abc, abd, acd, bcd and
/// edge order ab, ac, ad, bc, cd, bd. Values are the order index.
Filtration tetrahedron_fixture();

/// Vertices from letters: "bcd" -> {1, 2, 3}.
std::vector<Vertex> letters(std::string_view name);
std::string letters(std::span<const Vertex> vertices);
FiltrationEntry entry_of(const Filtration& f, std::string_view name);

/// Chain rendered as "ab+ac+bc" (coefficients other than 1 as "2*ab").
std::string letter_chain(const Chain& chain, const Filtration& f);

/// Vertex tuples of a chain with coefficients, computed by brute force.
std::vector<std::pair<std::vector<Vertex>, Coefficient>> tuples(const Chain& chain,
                                                                const Filtration& f);

/// Boundary of a chain given as vertex tuples, evaluated without the
/// library's facet enumeration. Returns true when the result is zero.
bool is_cycle_bruteforce(const Chain& chain, const Filtration& f, const PrimeField& field);

}  // namespace phrep::testing
