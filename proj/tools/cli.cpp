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

#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "phrep/bench.hpp"
#include "phrep/diagram.hpp"
#include "phrep/errors.hpp"
#include "phrep/generators.hpp"
#include "phrep/io.hpp"
#include "phrep/oracle.hpp"
#include "phrep/persistence.hpp"

namespace phrep::cli {

namespace {

struct ComplexArgs {
  std::string input = "-";
  std::string input_format = "auto";
  int dim = 1;
  std::string threshold = "inf";
  std::uint32_t modulus = 2;
};

void add_complex_options(CLI::App& cmd, ComplexArgs& a) {
  cmd.add_option("input", a.input, "Input file ('-' for standard input)");
  cmd.add_option("--input-format", a.input_format, "auto, lower-distance or point-cloud")
      ->check(CLI::IsMember({"auto", "lower-distance", "point-cloud"}));
  cmd.add_option("--dim", a.dim, "Highest homology dimension")->check(CLI::NonNegativeNumber);
  cmd.add_option("--threshold", a.threshold, "Rips threshold, a number or 'inf'");
  cmd.add_option("--modulus", a.modulus, "Prime coefficient modulus");
}

double parse_threshold(const std::string& text) {
  if (text == "inf") return kInfinity;
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || std::isnan(value) || value < 0) {
    throw std::invalid_argument("threshold must be a non-negative number or 'inf'");
  }
  return value;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return io::read_file(path);
}

struct Loaded {
  RipsConfig cfg;
  Filtration filtration;
};

Loaded load(const ComplexArgs& a, std::istream& in) {
  RipsConfig cfg{a.dim, parse_threshold(a.threshold), a.modulus};
  cfg.validate();
  auto distances = io::parse_input(read_input(a.input, in), io::parse_input_format(a.input_format));
  return {cfg, Filtration::rips(std::move(distances), cfg)};
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

int run_command(const ComplexArgs& a, const std::string& mode_name, bool representatives,
                bool skip_trivial, bool truncate, bool clearing, bool emergent,
                std::size_t oracle_cap, const std::string& format, const std::string& output,
                std::istream& in, std::ostream& out) {
  auto [cfg, filtration] = load(a, in);
  const PrimeField field(cfg.modulus);
  PersistenceOptions options;
  options.mode = parse_mode(mode_name);
  options.representatives = representatives && options.mode != Mode::cohomology;
  options.truncate = truncate;
  options.clearing = clearing;
  options.emergent = emergent;
  options.oracle_cap = oracle_cap;
  const auto result = compute_persistence(filtration, field, options);
  DiagramMetadata meta;
  meta.modulus = cfg.modulus;
  meta.threshold = cfg.threshold;
  meta.max_dim = cfg.max_dim;
  meta.points = filtration.vertex_count();
  meta.mode = mode_name;
  const auto doc = make_document(result.pairs, filtration, meta, skip_trivial);
  write_output(output, emit(doc, parse_output_format(format)), out);
  return kSuccess;
}

bool same_pair(const PersistencePair& a, const PersistencePair& b) {
  return a.dim == b.dim && a.birth == b.birth && a.death == b.death;
}

int verify_command(const ComplexArgs& a, std::size_t oracle_cap, std::istream& in,
                   std::ostream& out) {
  auto [cfg, filtration] = load(a, in);
  const PrimeField field(cfg.modulus);
  PersistenceOptions involuted;
  involuted.truncate = false;
  PersistenceOptions cohomology;
  cohomology.mode = Mode::cohomology;
  PersistenceOptions dense;
  dense.mode = Mode::homology_oracle;
  dense.oracle_cap = oracle_cap;

  const auto mine = compute_persistence(filtration, field, involuted);
  const auto cohom = compute_persistence(filtration, field, cohomology);
  const auto reference = compute_persistence(filtration, field, dense);

  bool pairs_ok = mine.pairs.size() == reference.pairs.size() &&
                  cohom.pairs.size() == reference.pairs.size();
  bool reps_ok = pairs_ok;
  for (std::size_t i = 0; pairs_ok && i < mine.pairs.size(); ++i) {
    pairs_ok = same_pair(mine.pairs[i], reference.pairs[i]) &&
               same_pair(cohom.pairs[i], reference.pairs[i]);
    reps_ok = reps_ok && pairs_ok && mine.pairs[i].representative == reference.pairs[i].representative;
  }
  out << "points: " << filtration.vertex_count() << ", max_dim: " << cfg.max_dim
      << ", modulus: " << cfg.modulus << "\n";
  out << "pairs (involuted / cohomology / oracle): " << mine.pairs.size() << " / "
      << cohom.pairs.size() << " / " << reference.pairs.size() << "\n";
  out << "pairing: " << (pairs_ok ? "OK" : "MISMATCH") << "\n";
  out << "representatives: " << (reps_ok ? "OK" : "MISMATCH") << "\n";
  return pairs_ok && reps_ok ? kSuccess : kConsistencyError;
}

std::vector<Mode> parse_modes(const std::string& list) {
  std::vector<Mode> modes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) modes.push_back(parse_mode(item));
  }
  if (modes.empty()) throw std::invalid_argument("no benchmark modes given");
  return modes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Persistent homology of Vietoris-Rips filtrations with representative cycles"};
  app.require_subcommand(1);

  // run
  ComplexArgs run_args;
  std::string mode = "involuted", format = "text", output;
  bool representatives = true, skip_trivial = true, truncate = false;
  bool no_clearing = false, no_emergent = false;
  std::size_t oracle_cap = oracle::kDefaultColumnCap;
  auto* run_cmd = app.add_subcommand("run", "Compute a persistence diagram");
  add_complex_options(*run_cmd, run_args);
  run_cmd->add_option("--mode", mode, "involuted, cohomology, homology or homology-oracle")
      ->check(CLI::IsMember({"involuted", "cohomology", "homology", "homology-oracle"}));
  run_cmd->add_flag("--representatives,!--no-representatives", representatives,
                    "Emit representative cycles (default on)");
  run_cmd->add_flag("--skip-trivial,!--keep-trivial", skip_trivial,
                    "Suppress zero-length intervals (default on)");
  run_cmd->add_flag("--truncate", truncate,
                    "Drop restricted columns after the last nontrivial death");
  run_cmd->add_flag("--no-clearing", no_clearing, "Disable clearing in the coboundary phase");
  run_cmd->add_flag("--no-emergent", no_emergent, "Store every reduced column explicitly");
  run_cmd->add_option("--oracle-cap", oracle_cap, "Simplex cap for homology-oracle mode");
  run_cmd->add_option("--format", format, "text, json or svg")
      ->check(CLI::IsMember({"text", "json", "svg"}));
  run_cmd->add_option("--output,-o", output, "Output file (default standard output)");

  // verify
  ComplexArgs verify_args;
  std::size_t verify_cap = oracle::kDefaultColumnCap;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check against the dense oracle");
  add_complex_options(*verify_cmd, verify_args);
  verify_cmd->add_option("--oracle-cap", verify_cap, "Simplex cap for the oracle");

  // bench
  std::vector<std::string> bench_files;
  std::vector<std::size_t> gcycle_sizes, random_sizes;
  std::size_t random_ambient = 3;
  std::uint64_t seed = 1;
  int bench_dim = 1;
  std::string bench_threshold = "inf", bench_modes = "involuted,cohomology", bench_format = "auto";
  int repeats = 1;
  std::size_t bench_cap = oracle::kDefaultColumnCap;
  std::uint32_t bench_modulus = 2;
  auto* bench_cmd = app.add_subcommand("bench", "Time modes and report matrix sizes");
  bench_cmd->add_option("files", bench_files, "Distance matrix or point cloud files");
  bench_cmd->add_option("--input-format", bench_format, "Format of the files")
      ->check(CLI::IsMember({"auto", "lower-distance", "point-cloud"}));
  bench_cmd->add_option("--gcycle", gcycle_sizes, "Cycle-graph metrics with these sizes");
  bench_cmd->add_option("--random", random_sizes, "Uniform random clouds with these sizes");
  bench_cmd->add_option("--random-dim", random_ambient, "Ambient dimension of random clouds");
  bench_cmd->add_option("--seed", seed, "Seed for random clouds");
  bench_cmd->add_option("--dim", bench_dim, "Highest homology dimension")
      ->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--threshold", bench_threshold, "Rips threshold, a number or 'inf'");
  bench_cmd->add_option("--modulus", bench_modulus, "Prime coefficient modulus");
  bench_cmd->add_option("--modes", bench_modes, "Comma-separated modes");
  bench_cmd->add_option("--repeats", repeats, "Runs per cell; the minimum is reported");
  bench_cmd->add_option("--oracle-cap", bench_cap, "Simplex cap for homology-oracle mode");

  // gen
  std::string kind;
  std::size_t points = 100, ambient = 3;
  double radius = 1, inner = 0.8, outer = 1.2;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic dataset");
  gen_cmd->add_option("kind", kind, "cycle, cube, circle, regular-circle or annulus")
      ->required()
      ->check(CLI::IsMember({"cycle", "cube", "circle", "regular-circle", "annulus"}));
  gen_cmd->add_option("--points,-n", points, "Number of points");
  gen_cmd->add_option("--dim", ambient, "Ambient dimension (cube)");
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--radius", radius, "Circle radius");
  gen_cmd->add_option("--inner", inner, "Annulus inner radius");
  gen_cmd->add_option("--outer", outer, "Annulus outer radius");
  gen_cmd->add_option("--output,-o", gen_output, "Output file (default standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*run_cmd) {
      return run_command(run_args, mode, representatives, skip_trivial, truncate, !no_clearing,
                         !no_emergent, oracle_cap, format, output, in, out);
    }
    if (*verify_cmd) return verify_command(verify_args, verify_cap, in, out);
    if (*bench_cmd) {
      const double threshold = parse_threshold(bench_threshold);
      std::vector<bench::Dataset> datasets;
      for (const auto& path : bench_files) {
        if (!std::filesystem::exists(path)) {
          err << "notice: skipping missing dataset '" << path << "'\n";
          continue;
        }
        datasets.push_back({std::filesystem::path(path).filename().string(),
                            io::parse_input(io::read_file(path), io::parse_input_format(bench_format)),
                            bench_dim, threshold});
      }
      for (auto n : gcycle_sizes) {
        datasets.push_back({"gcycle-" + std::to_string(n), gen::cycle_graph(n), bench_dim, threshold});
      }
      for (auto n : random_sizes) {
        datasets.push_back({"random" + std::to_string(random_ambient) + "-" + std::to_string(n),
                            gen::euclidean(gen::uniform_cube(n, random_ambient, seed)), bench_dim,
                            threshold});
      }
      if (datasets.empty()) datasets.push_back({"gcycle-100", gen::cycle_graph(100), bench_dim, threshold});
      bench::Options options{bench_modulus, repeats, bench_cap};
      out << bench::format_table(bench::run(datasets, parse_modes(bench_modes), options));
      return kSuccess;
    }
    if (*gen_cmd) {
      std::string text;
      if (kind == "cycle") {
        text = io::write_lower_distance(gen::cycle_graph(points));
      } else if (kind == "cube") {
        text = io::write_point_cloud(gen::uniform_cube(points, ambient, seed));
      } else if (kind == "circle") {
        text = io::write_point_cloud(gen::random_circle(points, radius, seed));
      } else if (kind == "regular-circle") {
        text = io::write_point_cloud(gen::regular_circle(points, radius));
      } else {
        text = io::write_point_cloud(gen::annulus(points, inner, outer, seed));
      }
      write_output(gen_output, text, out);
      return kSuccess;
    }
  } catch (const InputFormatError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kConsistencyError;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::logic_error& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kConsistencyError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace phrep::cli
