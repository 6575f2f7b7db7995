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

#include "phrep/diagram.hpp"
#include "phrep/errors.hpp"
#include "phrep/generators.hpp"
#include "phrep/persistence.hpp"
#include "support.hpp"

namespace phrep {
namespace {

DiagramDocument fixture_document(bool skip_trivial) {
  const auto f = testing::tetrahedron_fixture();
  const auto result = compute_persistence(f, PrimeField(2));
  DiagramMetadata meta;
  meta.points = 4;
  meta.max_dim = 2;
  return make_document(result.pairs, f, meta, skip_trivial);
}

TEST(Diagram, FixtureText) {
  const auto text = emit(fixture_document(true), OutputFormat::text);
  EXPECT_NE(text.find(" [7,10): [0,1]+[0,2]+[1,2]\n"), std::string::npos) << text;
  EXPECT_NE(text.find(" [9,11): "), std::string::npos) << text;
  EXPECT_NE(text.find(" [8,12): "), std::string::npos) << text;
  EXPECT_NE(text.find(" [0,inf): [0]\n"), std::string::npos) << text;
}

TEST(Diagram, JsonRoundTrip) {
  for (bool skip : {true, false}) {
    const auto doc = fixture_document(skip);
    EXPECT_EQ(parse_document(emit(doc, OutputFormat::json)), doc);
  }
  for (const auto& inst : testing::random_instances(30, 61)) {
    const auto f = Filtration::rips(inst.distances, inst.cfg);
    PersistenceOptions o;
    o.representatives = inst.cfg.modulus != 5;
    const auto result = compute_persistence(f, PrimeField(inst.cfg.modulus), o);
    DiagramMetadata meta{inst.cfg.modulus, inst.cfg.threshold, inst.cfg.max_dim, f.vertex_count()};
    const auto doc = make_document(result.pairs, f, meta, false);
    const auto json = emit(doc, OutputFormat::json);
    EXPECT_EQ(parse_document(json), doc) << inst.name;
    EXPECT_EQ(emit(parse_document(json), OutputFormat::json), json);
  }
}

TEST(Diagram, EmptyDocument) {
  DiagramDocument doc;
  for (auto format : {OutputFormat::text, OutputFormat::json, OutputFormat::svg}) {
    EXPECT_FALSE(emit(doc, format).empty());
  }
  EXPECT_EQ(parse_document(emit(doc, OutputFormat::json)), doc);
  EXPECT_NE(emit(doc, OutputFormat::svg).find("</svg>"), std::string::npos);
}

TEST(Diagram, SvgHasOneMarkerPerFiniteInterval) {
  const auto f = Filtration::rips(gen::cycle_graph(12), {1, kInfinity, 2});
  DiagramMetadata meta;
  meta.points = 12;
  const auto doc = make_document(compute_persistence(f, PrimeField(2)).pairs, f, meta, true);
  const auto svg = emit(doc, OutputFormat::svg);
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("class=\"dim0\""), std::string::npos);
  EXPECT_NE(svg.find("class=\"dim1\""), std::string::npos);
}

TEST(Diagram, ParseRejectsMalformedJson) {
  EXPECT_THROW(parse_document("{"), InputFormatError);
  EXPECT_THROW(parse_document(R"({"format": "other", "version": 1})"), InputFormatError);
}

TEST(Diagram, FormatChain) {
  EXPECT_EQ(format_chain({{{0, 1}, 1}, {{1, 2}, 2}}), "[0,1]+2*[1,2]");
  EXPECT_EQ(format_chain({}), "");
  EXPECT_THROW(parse_output_format("png"), std::invalid_argument);
}

}  // namespace
}  // namespace phrep
