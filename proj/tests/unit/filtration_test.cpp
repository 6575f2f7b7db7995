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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "phrep/chain.hpp"
#include "phrep/filtration.hpp"
#include "phrep/generators.hpp"
#include "support.hpp"

namespace phrep {
namespace {

DistanceMatrix unit_square() {
  return gen::euclidean({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

TEST(DistanceMatrix, Validation) {
  EXPECT_THROW(DistanceMatrix(2, {0, 1, 2, 0}), std::invalid_argument);
  EXPECT_THROW(DistanceMatrix(2, {1, 1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(DistanceMatrix(2, {0, -1, -1, 0}), std::invalid_argument);
  EXPECT_THROW(DistanceMatrix(2, {0, NAN, NAN, 0}), std::invalid_argument);
  EXPECT_THROW(DistanceMatrix(2, {0, 1, 1}), std::invalid_argument);
  const std::vector<double> lower{3};
  EXPECT_EQ(DistanceMatrix::from_lower_triangle(2, lower), DistanceMatrix(2, {0, 3, 3, 0}));
}

TEST(RipsConfig, Validation) {
  EXPECT_THROW((RipsConfig{-1, kInfinity, 2}.validate()), std::invalid_argument);
  EXPECT_THROW((RipsConfig{1, -1, 2}.validate()), std::invalid_argument);
  EXPECT_THROW((RipsConfig{1, kInfinity, 4}.validate()), std::invalid_argument);
  EXPECT_NO_THROW((RipsConfig{2, 0.5, 3}.validate()));
}

TEST(Diameter, Examples) {
  const auto d = unit_square();
  const BinomialTable t(4, 5);
  EXPECT_EQ(diameter({0, 2}, d, t), 0.0);
  const std::vector<Vertex> e{1, 3}, all{0, 1, 2, 3};
  EXPECT_EQ(diameter(encode(e, 4, t), d, t), d(1, 3));
  EXPECT_DOUBLE_EQ(diameter(encode(all, 4, t), d, t), std::sqrt(2.0));
}

TEST(Enumerate, EquilateralTiesAreDeterministic) {
  const auto d = DistanceMatrix(3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
  const auto edges = enumerate_filtration(d, {1, kInfinity, 2}, 1);
  ASSERT_EQ(edges.size(), 3u);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EXPECT_EQ(edges[i].value, 1.0);
    EXPECT_EQ(edges[i].rank, i);
  }
  EXPECT_EQ(edges, enumerate_filtration(d, {1, kInfinity, 2}, 1));
}

TEST(Enumerate, ThresholdDropsDiagonals) {
  const auto edges = enumerate_filtration(unit_square(), {1, 1.0, 2}, 1);
  ASSERT_EQ(edges.size(), 4u);
  for (const auto& e : edges) EXPECT_EQ(e.value, 1.0);
  EXPECT_TRUE(enumerate_filtration(unit_square(), {1, 1.0, 2}, 2).empty());
}

TEST(Enumerate, DistinctDistancesFollowFixtureEdgeOrder) {
  // ab < ac < ad < bc < cd < bd
  std::vector<double> lower{1, 2, 4, 3, 6, 5};
  const auto d = DistanceMatrix::from_lower_triangle(4, lower);
  const auto edges = enumerate_filtration(d, {1, kInfinity, 2}, 1);
  const Filtration f = Filtration::rips(d, {1, kInfinity, 2});
  std::vector<std::string> names;
  for (const auto& e : edges) names.push_back(testing::letters(f.vertices(e.simplex())));
  EXPECT_EQ(names, (std::vector<std::string>{"ab", "ac", "ad", "bc", "cd", "bd"}));
}

TEST(Filtration, RipsSimplicesAreSortedAndComplete) {
  for (const auto& inst : testing::random_instances(40, 11)) {
    const auto f = Filtration::rips(inst.distances, inst.cfg);
    for (int k = 0; k <= f.top_dim(); ++k) {
      const auto s = f.simplices(k);
      EXPECT_TRUE(std::is_sorted(s.begin(), s.end(), filtration_less));
      EXPECT_EQ(s.size(), f.count(k));
      for (const auto& e : s) {
        EXPECT_LE(e.value, inst.cfg.threshold);
        EXPECT_EQ(f.entry(e.simplex()), e);
      }
    }
  }
}

TEST(Filtration, CountIsArithmeticWhenUnbounded) {
  const auto f = Filtration::rips(gen::cycle_graph(100), {2, kInfinity, 2});
  EXPECT_EQ(f.count(0), 100u);
  EXPECT_EQ(f.count(1), 4950u);
  EXPECT_EQ(f.count(2), 161700u);
  EXPECT_EQ(f.count(3), 3921225u);
}

TEST(Filtration, CofacetsAndFacetsAgree) {
  for (const auto& inst : testing::random_instances(30, 12)) {
    const auto f = Filtration::rips(inst.distances, inst.cfg);
    std::vector<Vertex> scratch;
    for (int k = 0; k < f.top_dim(); ++k) {
      for (const auto& e : f.simplices(k)) {
        f.for_each_cofacet(e, scratch, [&](const FiltrationEntry& c, bool odd) {
          EXPECT_EQ(f.entry(c.simplex()), c);
          bool found = false;
          std::vector<Vertex> inner;
          f.for_each_facet(c, inner, [&](const FiltrationEntry& face, bool face_odd) {
            if (face == e) {
              found = true;
              EXPECT_EQ(face_odd, odd);
            }
          });
          EXPECT_TRUE(found);
        });
      }
    }
  }
}

TEST(Filtration, ExplicitValuesRequireClosedMonotoneInput) {
  using List = std::vector<std::pair<std::vector<Vertex>, double>>;
  const List missing_face{{{0}, 0}, {{0, 1}, 1}};
  EXPECT_THROW(Filtration::explicit_values(2, 1, missing_face), std::invalid_argument);
  const List decreasing{{{0}, 0}, {{1}, 2}, {{0, 1}, 1}};
  EXPECT_THROW(Filtration::explicit_values(2, 1, decreasing), std::invalid_argument);
  const List ok{{{0}, 0}, {{1}, 0}, {{0, 1}, 1}};
  EXPECT_EQ(Filtration::explicit_values(2, 1, ok).count(1), 1u);
}

TEST(Chain, BoundaryOfBoundaryIsZero) {
  for (const auto& inst : testing::random_instances(30, 13)) {
    const auto f = Filtration::rips(inst.distances, inst.cfg);
    const PrimeField field(inst.cfg.modulus);
    for (int k = 2; k <= f.top_dim(); ++k) {
      for (const auto& e : f.simplices(k)) {
        const Chain c = Chain::single(e, 1);
        const Chain b = boundary(c, f, field);
        EXPECT_EQ(b.size(), static_cast<std::size_t>(k + 1));
        EXPECT_TRUE(boundary(b, f, field).empty());
      }
    }
  }
}

TEST(Chain, NormalizesTermsAndScales) {
  const PrimeField f5(5);
  const FiltrationEntry a{0, 0, 0}, b{0, 1, 0};
  const Chain c = Chain::from_terms({Term(b, 2), Term(a, 3), Term(b, 3)}, f5);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.coefficient(a), 3u);
  EXPECT_EQ(c.coefficient(b), 0u);
  Chain d = Chain::single(b, 1);
  d.add_scaled(c, 2, f5);
  EXPECT_EQ(d.coefficient(a), 1u);
  EXPECT_EQ(d.latest().entry(), b);
  EXPECT_EQ(d.earliest().entry(), a);
}

}  // namespace
}  // namespace phrep
