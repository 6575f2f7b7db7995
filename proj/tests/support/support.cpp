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

#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "phrep/persistence.hpp"

namespace phrep::testing {

std::vector<Instance> random_instances(std::size_t count, std::uint64_t seed) {
  static constexpr std::uint32_t kModuli[] = {2, 3, 5};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Instance> out;
  std::normal_distribution<double> noise(0.0, 0.03);
  for (std::size_t i = 0; i < count; ++i) {
    // Every (max_dim, p, threshold, shape) combination recurs every 54 instances.
    const int max_dim = static_cast<int>(i % 3);
    const std::uint32_t p = kModuli[(i / 3) % 3];
    const bool bounded = (i / 9) % 2 == 1;
    const std::size_t shape = (i / 18) % 3;  // 0 uniform, 1 noisy circle, 2 noisy octahedron
    const std::size_t ambient = shape == 1 ? 2 : shape == 2 ? 3 : 2 + (i / 54) % 2;
    std::size_t n = 1 + (i * 7 + i / 10) % 10;
    if (shape == 1) n = 5 + i % 6;
    if (shape == 2) n = 6;
    std::vector<std::vector<double>> points(n, std::vector<double>(ambient));
    for (std::size_t a = 0; a < n; ++a) {
      auto& pt = points[a];
      if (shape == 0) {
        for (auto& x : pt) x = unit(rng);
        continue;
      }
      if (shape == 1) {
        const double t = 2 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(n);
        pt = {0.5 + 0.4 * std::cos(t), 0.5 + 0.4 * std::sin(t)};
      } else {
        pt = {0.5, 0.5, 0.5};
        pt[a / 2] += a % 2 == 0 ? 0.4 : -0.4;
      }
      for (auto& x : pt) x = std::clamp(x + noise(rng), 0.0, 1.0);
    }
    std::vector<double> entries(n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        double s = 0;
        for (std::size_t c = 0; c < ambient; ++c) s += (points[a][c] - points[b][c]) * (points[a][c] - points[b][c]);
        entries[a * n + b] = std::sqrt(s);
      }
    }
    DistanceMatrix d(n, std::move(entries));
    RipsConfig cfg{max_dim, bounded ? median_distance(d) : kInfinity, p};
    out.push_back({"instance-" + std::to_string(i) + " n=" + std::to_string(n) + " dim=" +
                       std::to_string(max_dim) + " p=" + std::to_string(p) +
                       (bounded ? " r=median" : " r=inf"),
                   std::move(d), cfg});
  }
  return out;
}

double median_distance(const DistanceMatrix& d) {
  std::vector<double> values;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) values.push_back(d(i, j));
  }
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

std::vector<Bar> bars(const std::vector<PersistencePair>& pairs) {
  std::vector<Bar> out;
  for (const auto& p : pairs) out.push_back({p.dim, p.birth.value, p.death ? p.death->value : kInfinity});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Cell {
  std::vector<int> v;
  double diam = 0;
};

bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

std::vector<Bar> naive_bars(const DistanceMatrix& d, const RipsConfig& cfg) {
  const int n = static_cast<int>(d.size());
  const int top = cfg.max_dim + 1;
  const int p = static_cast<int>(cfg.modulus);
  std::vector<Cell> cells;
  std::vector<int> cur;
  auto grow = [&](auto&& self, int next) -> void {
    if (!cur.empty()) {
      double diam = 0;
      for (std::size_t a = 0; a < cur.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) diam = std::max(diam, d(cur[a], cur[b]));
      }
      if (diam > cfg.threshold) return;
      cells.push_back({cur, diam});
      if (static_cast<int>(cur.size()) == top + 1) return;
    }
    for (int x = next; x < n; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  grow(grow, 0);
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    if (a.diam != b.diam) return a.diam < b.diam;
    if (a.v.size() != b.v.size()) return a.v.size() < b.v.size();
    return colex_less(a.v, b.v);
  });
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) index[cells[i].v] = i;

  const int m = static_cast<int>(cells.size());
  std::vector<std::map<int, int>> cols(m);
  for (int j = 0; j < m; ++j) {
    const auto& v = cells[j].v;
    if (v.size() < 2) continue;
    for (std::size_t k = 0; k < v.size(); ++k) {
      std::vector<int> face = v;
      face.erase(face.begin() + static_cast<long>(k));
      cols[j][index.at(face)] = k % 2 == 0 ? 1 : p - 1;
    }
  }
  auto inv = [p](int a) {
    for (int x = 1; x < p; ++x) {
      if (a * x % p == 1) return x;
    }
    return 0;
  };
  std::map<int, int> owner_of_low;
  std::vector<bool> paired(m, false);
  std::vector<Bar> out;
  for (int j = 0; j < m; ++j) {
    auto& c = cols[j];
    while (!c.empty()) {
      const int low = c.rbegin()->first;
      auto it = owner_of_low.find(low);
      if (it == owner_of_low.end()) break;
      const auto& other = cols[it->second];
      const int lambda = c.rbegin()->second * inv(other.rbegin()->second) % p;
      for (const auto& [row, val] : other) {
        int& x = c[row];
        x = ((x - lambda * val) % p + p) % p;
        if (x == 0) c.erase(row);
      }
    }
    if (!c.empty()) {
      const int low = c.rbegin()->first;
      owner_of_low[low] = j;
      paired[low] = paired[j] = true;
      const int dim = static_cast<int>(cells[low].v.size()) - 1;
      out.push_back({dim, cells[low].diam, cells[j].diam});
    }
  }
  for (int j = 0; j < m; ++j) {
    const int dim = static_cast<int>(cells[j].v.size()) - 1;
    if (!paired[j] && dim <= cfg.max_dim) out.push_back({dim, cells[j].diam, kInfinity});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> letters(std::string_view name) {
  std::vector<Vertex> v;
  for (char c : name) v.push_back(static_cast<Vertex>(c - 'a'));
  return v;
}

std::string letters(std::span<const Vertex> vertices) {
  std::string s;
  for (auto v : vertices) s.push_back(static_cast<char>('a' + v));
  return s;
}

Filtration tetrahedron_fixture() {
  static const char* kOrder[] = {"a",  "b",  "c",   "d",   "ab",  "ac",  "ad",  "bc",
                                 "cd", "bd", "abc", "abd", "acd", "bcd", "abcd"};
  std::vector<std::pair<std::vector<Vertex>, double>> simplices;
  double value = 0;
  for (const char* name : kOrder) simplices.emplace_back(letters(name), value++);
  return Filtration::explicit_values(4, 3, simplices);
}

FiltrationEntry entry_of(const Filtration& f, std::string_view name) {
  const auto v = letters(name);
  return f.entry(v).value();
}

std::vector<std::pair<std::vector<Vertex>, Coefficient>> tuples(const Chain& chain,
                                                                const Filtration& f) {
  std::vector<std::pair<std::vector<Vertex>, Coefficient>> out;
  for (const auto& t : chain.terms()) out.emplace_back(f.vertices(t.entry().simplex()), t.coeff);
  std::sort(out.begin(), out.end());
  return out;
}

std::string letter_chain(const Chain& chain, const Filtration& f) {
  std::string s;
  for (const auto& [v, c] : tuples(chain, f)) {
    if (!s.empty()) s += "+";
    if (c != 1) s += std::to_string(c) + "*";
    s += letters(v);
  }
  return s;
}

bool is_cycle_bruteforce(const Chain& chain, const Filtration& f, const PrimeField& field) {
  const auto p = static_cast<std::int64_t>(field.modulus());
  std::map<std::vector<Vertex>, std::int64_t> acc;
  for (const auto& [v, c] : tuples(chain, f)) {
    if (v.size() < 2) continue;
    for (std::size_t k = 0; k < v.size(); ++k) {
      auto face = v;
      face.erase(face.begin() + static_cast<long>(k));
      auto& x = acc[face];
      x = ((x + (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(c)) % p + p) % p;
    }
  }
  return std::all_of(acc.begin(), acc.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace phrep::testing
