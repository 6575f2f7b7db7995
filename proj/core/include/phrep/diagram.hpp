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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phrep/filtration.hpp"
#include "phrep/persistence.hpp"

namespace phrep {

/// Serializable persistence diagram with optional representative chains.
///
/// Structured (JSON) schema, version 1:
///
///   {
///     "format": "phrep-diagram", "version": 1,
///     "metadata": {"modulus": 2, "threshold": "inf" | number, "max_dim": 1,
///                  "points": 4, "mode": "involuted",
///                  "tie_break": "diameter,dimension,colex-rank"},
///     "diagrams": [
///       {"dim": 0, "intervals": [
///         {"birth": 0, "death": "inf" | number,
///          "representative": [{"simplex": [0, 1], "coefficient": 1}, ...]}
///       ]}, ...
///     ]
///   }
///
/// "representative" is omitted when not computed. Infinity is always the
/// string "inf". Numbers are written as the shortest decimal that reads
/// back to the same double, so a document survives a round trip exactly.
struct RepresentativeTerm {
  std::vector<Vertex> simplex;  // ascending 0-based input indices
  Coefficient coefficient = 1;  // in [1, p)

  friend bool operator==(const RepresentativeTerm&, const RepresentativeTerm&) = default;
};

struct Interval {
  double birth = 0;
  std::optional<double> death;  // nullopt: infinite
  std::optional<std::vector<RepresentativeTerm>> representative;

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct DiagramMetadata {
  std::uint32_t modulus = 2;
  double threshold = kInfinity;
  int max_dim = 1;
  std::size_t points = 0;
  std::string mode = "involuted";
  std::string tie_break = "diameter,dimension,colex-rank";

  friend bool operator==(const DiagramMetadata&, const DiagramMetadata&) = default;
};

struct DiagramDocument {
  DiagramMetadata metadata;
  std::vector<std::vector<Interval>> dims;  // index = homology dimension

  friend bool operator==(const DiagramDocument&, const DiagramDocument&) = default;
};

enum class OutputFormat { text, json, svg };

/// Throws std::invalid_argument for unknown names ("text", "json", "svg").
OutputFormat parse_output_format(std::string_view name);

/// Builds the document from sorted pairs; trivial intervals are dropped
/// when `skip_trivial` is set.
DiagramDocument make_document(const std::vector<PersistencePair>& pairs,
                              const Filtration& filtration, DiagramMetadata metadata,
                              bool skip_trivial);

std::string emit(const DiagramDocument& doc, OutputFormat format);

/// Parses the JSON serialization. Throws InputFormatError on schema errors.
DiagramDocument parse_document(std::string_view json);

/// "[0,1]+[0,2]+2*[1,2]"
std::string format_chain(const std::vector<RepresentativeTerm>& chain);

}  // namespace phrep
