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

#include <cstdint>
#include <vector>

namespace phrep {

/// Raw residue in [0, p). Hot paths pass these around together with a
/// PrimeField instead of carrying the modulus in every value.
using Coefficient = std::uint32_t;

/// True iff `p` is prime (trial division).
bool is_prime(std::uint64_t p);

/// Arithmetic in Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  /// Throws std::invalid_argument when `modulus` is not a prime below 2^31.
  explicit PrimeField(std::uint32_t modulus = 2);

  std::uint32_t modulus() const { return modulus_; }

  Coefficient reduce(std::int64_t value) const {
    auto r = value % static_cast<std::int64_t>(modulus_);
    return static_cast<Coefficient>(r < 0 ? r + modulus_ : r);
  }
  Coefficient add(Coefficient a, Coefficient b) const {
    auto s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
  }
  Coefficient negate(Coefficient a) const { return a == 0 ? 0 : modulus_ - a; }
  Coefficient subtract(Coefficient a, Coefficient b) const { return add(a, negate(b)); }
  Coefficient multiply(Coefficient a, Coefficient b) const {
    return static_cast<Coefficient>(static_cast<std::uint64_t>(a) * b % modulus_);
  }
  /// Throws std::invalid_argument for a == 0.
  Coefficient inverse(Coefficient a) const;
  Coefficient divide(Coefficient a, Coefficient b) const { return multiply(a, inverse(b)); }

  /// Coefficient of an oriented incidence with sign (-1)^odd.
  Coefficient sign(bool odd) const { return odd ? modulus_ - 1 : 1; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.modulus_ == b.modulus_;
  }

 private:
  std::uint32_t modulus_;
  std::vector<Coefficient> inverses_;  // filled only for small moduli
};

/// A residue tagged with its modulus. Mixing moduli is a programming error
/// and throws std::logic_error.
class FieldElement {
 public:
  FieldElement(std::int64_t value, std::uint32_t modulus);

  Coefficient value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  FieldElement inverse() const;

  friend FieldElement operator+(FieldElement a, FieldElement b);
  friend FieldElement operator-(FieldElement a, FieldElement b);
  friend FieldElement operator*(FieldElement a, FieldElement b);
  friend FieldElement operator/(FieldElement a, FieldElement b);
  FieldElement operator-() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldElement(Coefficient value, std::uint32_t modulus, bool /*reduced*/)
      : value_(value), modulus_(modulus) {}

  Coefficient value_;
  std::uint32_t modulus_;
};

}  // namespace phrep
