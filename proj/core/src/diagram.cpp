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

#include "phrep/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "phrep/errors.hpp"
#include "phrep/io.hpp"

namespace phrep {

namespace {

using nlohmann::json;

constexpr const char* kFormatName = "phrep-diagram";
constexpr int kFormatVersion = 1;

json number_or_inf(double v) { return std::isinf(v) ? json("inf") : json(v); }

double read_number_or_inf(const json& j, const char* what) {
  if (j.is_string() && j.get<std::string>() == "inf") return kInfinity;
  if (!j.is_number()) throw InputFormatError(std::string("field '") + what + "' must be a number or \"inf\"", 0);
  return j.get<double>();
}

std::string interval_text(const Interval& iv) {
  std::string s = "[" + io::format_number(iv.birth) + "," +
                  (iv.death ? io::format_number(*iv.death) : std::string("inf")) + ")";
  if (iv.representative) s += ": " + format_chain(*iv.representative);
  return s;
}

std::string emit_text(const DiagramDocument& doc) {
  const auto& m = doc.metadata;
  std::string out = "# modulus " + std::to_string(m.modulus) + ", threshold " +
                    io::format_number(m.threshold) + ", max_dim " + std::to_string(m.max_dim) +
                    ", points " + std::to_string(m.points) + ", mode " + m.mode + "\n";
  for (std::size_t dim = 0; dim < doc.dims.size(); ++dim) {
    out += "persistence intervals in dim " + std::to_string(dim) + ":\n";
    for (const auto& iv : doc.dims[dim]) out += " " + interval_text(iv) + "\n";
  }
  return out;
}

std::string emit_json(const DiagramDocument& doc) {
  const auto& m = doc.metadata;
  json j;
  j["format"] = kFormatName;
  j["version"] = kFormatVersion;
  j["metadata"] = {{"modulus", m.modulus},     {"threshold", number_or_inf(m.threshold)},
                   {"max_dim", m.max_dim},     {"points", m.points},
                   {"mode", m.mode},           {"tie_break", m.tie_break}};
  json diagrams = json::array();
  for (std::size_t dim = 0; dim < doc.dims.size(); ++dim) {
    json intervals = json::array();
    for (const auto& iv : doc.dims[dim]) {
      json item = {{"birth", iv.birth}, {"death", iv.death ? json(*iv.death) : json("inf")}};
      if (iv.representative) {
        json rep = json::array();
        for (const auto& t : *iv.representative) {
          rep.push_back({{"simplex", t.simplex}, {"coefficient", t.coefficient}});
        }
        item["representative"] = std::move(rep);
      }
      intervals.push_back(std::move(item));
    }
    diagrams.push_back({{"dim", dim}, {"intervals", std::move(intervals)}});
  }
  j["diagrams"] = std::move(diagrams);
  return j.dump(2) + "\n";
}

std::string emit_svg(const DiagramDocument& doc) {
  constexpr double kSize = 420, kMargin = 50, kPlot = kSize - 2 * kMargin, kInfBand = 22;
  double top = 0;
  for (const auto& dim : doc.dims) {
    for (const auto& iv : dim) {
      top = std::max(top, iv.birth);
      if (iv.death) top = std::max(top, *iv.death);
    }
  }
  if (top <= 0) top = 1;
  top *= 1.05;
  auto x = [&](double v) { return kMargin + v / top * kPlot; };
  auto y = [&](double v) { return kSize - kMargin - v / top * kPlot; };
  const double inf_y = kMargin - kInfBand;
  auto fmt = [](double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.2f", v);
    return std::string(buffer);
  };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
    << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
  s << "<style>text{font:11px sans-serif}.axis{stroke:#333;stroke-width:1}"
       ".diag{stroke:#999;stroke-width:1}.inf{stroke:#999;stroke-dasharray:4 3}"
       ".dim0{fill:#1f77b4}.dim1{fill:#d62728}.dim2{fill:#2ca02c}.dim3{fill:#9467bd}"
       ".dim4{fill:#8c564b}.dim5{fill:#e377c2}</style>\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<line class=\"axis\" x1=\"" << fmt(x(0)) << "\" y1=\"" << fmt(y(0)) << "\" x2=\""
    << fmt(x(top)) << "\" y2=\"" << fmt(y(0)) << "\"/>\n";
  s << "<line class=\"axis\" x1=\"" << fmt(x(0)) << "\" y1=\"" << fmt(y(0)) << "\" x2=\""
    << fmt(x(0)) << "\" y2=\"" << fmt(inf_y) << "\"/>\n";
  s << "<line class=\"diag\" x1=\"" << fmt(x(0)) << "\" y1=\"" << fmt(y(0)) << "\" x2=\""
    << fmt(x(top)) << "\" y2=\"" << fmt(y(top)) << "\"/>\n";
  s << "<line class=\"inf\" x1=\"" << fmt(x(0)) << "\" y1=\"" << fmt(inf_y) << "\" x2=\""
    << fmt(x(top)) << "\" y2=\"" << fmt(inf_y) << "\"/>\n";
  s << "<text x=\"" << fmt(x(0) - 30) << "\" y=\"" << fmt(inf_y + 4) << "\">inf</text>\n";
  s << "<text x=\"" << fmt(x(top) - 30) << "\" y=\"" << fmt(y(0) + 30) << "\">birth</text>\n";
  s << "<text x=\"" << fmt(x(0) - 40) << "\" y=\"" << fmt(y(top) + 20) << "\">death</text>\n";
  for (std::size_t dim = 0; dim < doc.dims.size(); ++dim) {
    for (const auto& iv : doc.dims[dim]) {
      const double cy = iv.death ? y(*iv.death) : inf_y;
      s << "<circle class=\"dim" << dim % 6 << "\" cx=\"" << fmt(x(iv.birth)) << "\" cy=\""
        << fmt(cy) << "\" r=\"3\"><title>dim " << dim << " [" << io::format_number(iv.birth)
        << "," << (iv.death ? io::format_number(*iv.death) : std::string("inf"))
        << ")</title></circle>\n";
    }
    s << "<circle class=\"dim" << dim % 6 << "\" cx=\"" << fmt(kSize - 70) << "\" cy=\""
      << fmt(y(0) - 12.0 * (static_cast<double>(dim) + 1)) << "\" r=\"3\"/><text x=\""
      << fmt(kSize - 62) << "\" y=\"" << fmt(y(0) - 12.0 * (static_cast<double>(dim) + 1) + 4)
      << "\">H" << dim << "</text>\n";
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "svg") return OutputFormat::svg;
  throw std::invalid_argument("unknown output format '" + std::string(name) + "'");
}

std::string format_chain(const std::vector<RepresentativeTerm>& chain) {
  std::string out;
  for (const auto& t : chain) {
    if (!out.empty()) out += '+';
    if (t.coefficient != 1) out += std::to_string(t.coefficient) + "*";
    out += '[';
    for (std::size_t i = 0; i < t.simplex.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(t.simplex[i]);
    }
    out += ']';
  }
  return out;
}

DiagramDocument make_document(const std::vector<PersistencePair>& pairs,
                              const Filtration& filtration, DiagramMetadata metadata,
                              bool skip_trivial) {
  DiagramDocument doc;
  doc.dims.resize(static_cast<std::size_t>(metadata.max_dim) + 1);
  doc.metadata = std::move(metadata);
  for (const auto& p : pairs) {
    if (p.dim > doc.metadata.max_dim || (skip_trivial && p.trivial())) continue;
    Interval iv;
    iv.birth = p.birth.value;
    if (p.death) iv.death = p.death->value;
    if (p.representative) {
      std::vector<RepresentativeTerm> terms;
      for (const auto& t : p.representative->terms()) {
        terms.push_back({filtration.vertices(t.entry().simplex()), t.coeff});
      }
      iv.representative = std::move(terms);
    }
    doc.dims[static_cast<std::size_t>(p.dim)].push_back(std::move(iv));
  }
  return doc;
}

std::string emit(const DiagramDocument& doc, OutputFormat format) {
  switch (format) {
    case OutputFormat::text: return emit_text(doc);
    case OutputFormat::json: return emit_json(doc);
    case OutputFormat::svg: return emit_svg(doc);
  }
  return {};
}

DiagramDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputFormatError(std::string("diagram JSON: ") + e.what(), e.byte);
  }
  try {
    if (j.at("format") != kFormatName || j.at("version") != kFormatVersion) {
      throw InputFormatError("unsupported diagram format or version", 0);
    }
    DiagramDocument doc;
    const auto& m = j.at("metadata");
    doc.metadata.modulus = m.at("modulus").get<std::uint32_t>();
    doc.metadata.threshold = read_number_or_inf(m.at("threshold"), "threshold");
    doc.metadata.max_dim = m.at("max_dim").get<int>();
    doc.metadata.points = m.at("points").get<std::size_t>();
    doc.metadata.mode = m.at("mode").get<std::string>();
    doc.metadata.tie_break = m.at("tie_break").get<std::string>();
    for (const auto& d : j.at("diagrams")) {
      const auto dim = d.at("dim").get<std::size_t>();
      if (doc.dims.size() <= dim) doc.dims.resize(dim + 1);
      for (const auto& item : d.at("intervals")) {
        Interval iv;
        iv.birth = item.at("birth").get<double>();
        const double death = read_number_or_inf(item.at("death"), "death");
        if (!std::isinf(death)) iv.death = death;
        if (item.contains("representative")) {
          std::vector<RepresentativeTerm> rep;
          for (const auto& t : item.at("representative")) {
            rep.push_back({t.at("simplex").get<std::vector<Vertex>>(),
                           t.at("coefficient").get<Coefficient>()});
          }
          iv.representative = std::move(rep);
        }
        doc.dims[dim].push_back(std::move(iv));
      }
    }
    return doc;
  } catch (const json::exception& e) {
    throw InputFormatError(std::string("diagram JSON schema: ") + e.what(), 0);
  }
}

}  // namespace phrep
