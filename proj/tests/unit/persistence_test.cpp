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

#include <stdexcept>

#include "phrep/chain.hpp"
#include "phrep/generators.hpp"
#include "phrep/oracle.hpp"
#include "phrep/persistence.hpp"
#include "support.hpp"

namespace phrep {
namespace {

const std::vector<testing::Instance>& instances() {
  static const auto all = testing::random_instances(90, 51);
  return all;
}

PersistenceResult run(const testing::Instance& inst, PersistenceOptions options) {
  const auto f = Filtration::rips(inst.distances, inst.cfg);
  return compute_persistence(f, PrimeField(inst.cfg.modulus), options);
}

PersistenceOptions with_mode(Mode mode) {
  PersistenceOptions o;
  o.mode = mode;
  return o;
}

TEST(Mode, Names) {
  for (auto m : {Mode::involuted, Mode::cohomology, Mode::homology, Mode::homology_oracle}) {
    EXPECT_EQ(parse_mode(to_string(m)), m);
  }
  EXPECT_EQ(to_string(Mode::homology_oracle), "homology-oracle");
  EXPECT_THROW(parse_mode("fast"), std::invalid_argument);
}

TEST(Persistence, AllModesAgreeWithIndependentReduction) {
  for (const auto& inst : instances()) {
    const auto expected = testing::naive_bars(inst.distances, inst.cfg);
    for (auto m : {Mode::involuted, Mode::cohomology, Mode::homology, Mode::homology_oracle}) {
      EXPECT_EQ(testing::bars(run(inst, with_mode(m)).pairs), expected)
          << inst.name << " mode " << to_string(m);
    }
  }
}

TEST(Persistence, RepresentativesMatchOracleAndHomology) {
  for (const auto& inst : instances()) {
    const auto a = run(inst, with_mode(Mode::involuted)).pairs;
    const auto b = run(inst, with_mode(Mode::homology_oracle)).pairs;
    const auto c = run(inst, with_mode(Mode::homology)).pairs;
    ASSERT_EQ(a.size(), b.size());
    ASSERT_EQ(a.size(), c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].birth, b[i].birth) << inst.name;
      EXPECT_EQ(a[i].representative, b[i].representative) << inst.name;
      EXPECT_EQ(c[i].representative, b[i].representative) << inst.name;
    }
  }
}

TEST(Persistence, RepresentativesAreValidCycles) {
  for (const auto& inst : instances()) {
    const auto f = Filtration::rips(inst.distances, inst.cfg);
    const PrimeField field(inst.cfg.modulus);
    for (const auto& p : compute_persistence(f, field).pairs) {
      ASSERT_TRUE(p.representative.has_value());
      const Chain& rep = *p.representative;
      ASSERT_FALSE(rep.empty());
      EXPECT_TRUE(boundary(rep, f, field).empty()) << inst.name;
      EXPECT_TRUE(testing::is_cycle_bruteforce(rep, f, field)) << inst.name;
      if (p.essential()) {
        EXPECT_NE(rep.coefficient(p.birth), 0u);
      } else {
        EXPECT_EQ(rep.latest().entry(), p.birth);
      }
    }
  }
}

TEST(Persistence, OptimizationsDoNotChangeResults) {
  for (const auto& inst : instances()) {
    const auto reference = run(inst, {});
    for (bool clearing : {true, false}) {
      for (bool emergent : {true, false}) {
        PersistenceOptions o;
        o.clearing = clearing;
        o.emergent = emergent;
        const auto other = run(inst, o);
        ASSERT_EQ(other.pairs.size(), reference.pairs.size());
        for (std::size_t i = 0; i < other.pairs.size(); ++i) {
          EXPECT_EQ(other.pairs[i].birth, reference.pairs[i].birth);
          EXPECT_EQ(other.pairs[i].death, reference.pairs[i].death);
          EXPECT_EQ(other.pairs[i].representative, reference.pairs[i].representative);
        }
      }
    }
  }
}

TEST(Persistence, CohomologyModeHasNoRepresentatives) {
  for (const auto& p : run(instances()[5], with_mode(Mode::cohomology)).pairs) {
    EXPECT_FALSE(p.representative.has_value());
  }
  PersistenceOptions o;
  o.representatives = false;
  for (const auto& p : run(instances()[5], o).pairs) EXPECT_FALSE(p.representative.has_value());
}

TEST(Persistence, CycleGraphColumnCounts) {
  const auto f = Filtration::rips(gen::cycle_graph(100), {1, kInfinity, 2});
  const auto result = compute_persistence(f, PrimeField(2));
  EXPECT_EQ(result.counts.boundary, 100u + 4950u + 161700u);
  EXPECT_EQ(boundary_column_count(f), result.counts.boundary);
  // One essential vertex, 99 edge deaths and C(99, 2) triangle deaths.
  EXPECT_EQ(result.counts.restricted, 1u + 99u + 4851u);
  EXPECT_LE(result.counts.restricted, result.counts.coboundary);
  EXPECT_LE(result.counts.coboundary, result.counts.boundary);
}

TEST(Persistence, CycleGraphHasOneLongLoop) {
  const auto f = Filtration::rips(gen::cycle_graph(12), {1, kInfinity, 2});
  std::size_t long_loops = 0;
  for (const auto& p : compute_persistence(f, PrimeField(2)).pairs) {
    if (p.dim == 1 && !p.trivial()) {
      ++long_loops;
      EXPECT_EQ(p.birth.value, 1.0);
      EXPECT_EQ(p.death->value, 4.0);
    }
  }
  EXPECT_EQ(long_loops, 1u);
}

TEST(Persistence, SortOrder) {
  auto pairs = run(instances()[7], {}).pairs;
  auto shuffled = pairs;
  std::reverse(shuffled.begin(), shuffled.end());
  sort_pairs(shuffled);
  ASSERT_EQ(shuffled.size(), pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) EXPECT_EQ(shuffled[i].birth, pairs[i].birth);
}

}  // namespace
}  // namespace phrep
