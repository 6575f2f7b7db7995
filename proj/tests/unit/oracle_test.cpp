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

#include <gtest/gtest.h>

#include "phrep/errors.hpp"
#include "phrep/generators.hpp"
#include "phrep/oracle.hpp"
#include "support.hpp"

namespace phrep {
namespace {

using testing::entry_of;
using testing::letters;

std::vector<std::string> names(const std::vector<FiltrationEntry>& entries, const Filtration& f) {
  std::vector<std::string> out;
  for (const auto& e : entries) out.push_back(letters(f.vertices(e.simplex())));
  return out;
}

TEST(Oracle, FixtureBoundaryMatrix) {
  const auto f = testing::tetrahedron_fixture();
  const auto m = oracle::boundary_matrix(f, PrimeField(2), 2);
  EXPECT_EQ(names(m.rows, f), (std::vector<std::string>{"ab", "ac", "ad", "bc", "cd", "bd"}));
  EXPECT_EQ(names(m.cols, f), (std::vector<std::string>{"abc", "abd", "acd", "bcd"}));
  const std::vector<std::vector<Coefficient>> expected{
      {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}};
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(m.at(r, c), expected[r][c]) << r << "," << c;
  }
}

TEST(Oracle, FixtureReducedMatrix) {
  const auto f = testing::tetrahedron_fixture();
  const auto result = oracle::full_reduce(f, PrimeField(2));
  const auto& m = result.reduced.at(2);
  const std::vector<std::vector<Coefficient>> expected{
      {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}};
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(m.at(r, c), expected[r][c]) << r << "," << c;
  }
}

TEST(Oracle, TwoPoints) {
  const auto f = Filtration::rips(DistanceMatrix(2, {0, 1, 1, 0}), {0, kInfinity, 2});
  const auto result = oracle::full_reduce(f, PrimeField(2));
  ASSERT_EQ(result.pairs.size(), 2u);
  std::size_t essential = 0;
  for (const auto& p : result.pairs) {
    EXPECT_EQ(p.dim, 0);
    if (p.essential()) {
      ++essential;
    } else {
      EXPECT_EQ(p.birth.value, 0.0);
      EXPECT_EQ(p.death->value, 1.0);
    }
  }
  EXPECT_EQ(essential, 1u);
}

TEST(Oracle, BoundarySpan) {
  const auto f = testing::tetrahedron_fixture();
  const PrimeField field(2);
  Chain rep;
  for (const char* e : {"ab", "ac", "bc"}) rep.add_scaled(Chain::single(entry_of(f, e), 1), 1, field);
  EXPECT_TRUE(oracle::in_boundary_span(rep, 1, entry_of(f, "abc"), f, field));
  EXPECT_FALSE(oracle::in_boundary_span(rep, 1, entry_of(f, "bd"), f, field));
  EXPECT_TRUE(oracle::in_boundary_span(Chain{}, 1, entry_of(f, "a"), f, field));
}

TEST(Oracle, RefusesLargeInstances) {
  const auto f = Filtration::rips(gen::cycle_graph(40), {2, kInfinity, 2});
  EXPECT_THROW(oracle::full_reduce(f, PrimeField(2)), CapacityError);
  const auto small = Filtration::rips(gen::cycle_graph(8), {1, kInfinity, 2});
  EXPECT_THROW(oracle::full_reduce(small, PrimeField(2), 50), CapacityError);
  EXPECT_NO_THROW(oracle::full_reduce(small, PrimeField(2), 200));
}

TEST(Oracle, MatchesIndependentReduction) {
  for (const auto& inst : testing::random_instances(80, 41)) {
    const auto f = Filtration::rips(inst.distances, inst.cfg);
    const auto result = oracle::full_reduce(f, PrimeField(inst.cfg.modulus));
    EXPECT_EQ(testing::bars(result.pairs), testing::naive_bars(inst.distances, inst.cfg)) << inst.name;
  }
}

}  // namespace
}  // namespace phrep
