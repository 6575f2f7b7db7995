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

#include "phrep/field.hpp"

#include <stdexcept>
#include <string>

namespace phrep {

namespace {

constexpr std::uint32_t kInverseTableLimit = 1u << 16;

// Extended Euclid; returns x with a*x = 1 mod m for gcd(a, m) = 1.
std::int64_t modular_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const auto q = old_r / r;
    old_r = old_r - q * r;
    std::swap(old_r, r);
    old_s = old_s - q * s;
    std::swap(old_s, s);
  }
  old_s %= m;
  return old_s < 0 ? old_s + m : old_s;
}

void check_same_modulus(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) {
    throw std::logic_error("field elements with different moduli " +
                           std::to_string(a.modulus()) + " and " +
                           std::to_string(b.modulus()));
  }
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : modulus_(modulus) {
  if (modulus >= (1u << 31) || !is_prime(modulus)) {
    throw std::invalid_argument("coefficient modulus " + std::to_string(modulus) +
                                " is not a prime below 2^31");
  }
  if (modulus < kInverseTableLimit) {
    inverses_.assign(modulus, 0);
    for (std::uint32_t a = 1; a < modulus; ++a) {
      inverses_[a] = static_cast<Coefficient>(modular_inverse(a, modulus));
    }
  }
}

Coefficient PrimeField::inverse(Coefficient a) const {
  if (a % modulus_ == 0) throw std::invalid_argument("zero has no multiplicative inverse");
  if (!inverses_.empty()) return inverses_[a];
  return static_cast<Coefficient>(modular_inverse(a, modulus_));
}

FieldElement::FieldElement(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  if (modulus >= (1u << 31) || !is_prime(modulus)) {
    throw std::invalid_argument("coefficient modulus " + std::to_string(modulus) +
                                " is not a prime below 2^31");
  }
  const auto r = value % static_cast<std::int64_t>(modulus);
  value_ = static_cast<Coefficient>(r < 0 ? r + modulus : r);
}

FieldElement FieldElement::inverse() const {
  if (value_ == 0) throw std::invalid_argument("zero has no multiplicative inverse");
  return {static_cast<Coefficient>(modular_inverse(value_, modulus_)), modulus_, true};
}

FieldElement FieldElement::operator-() const {
  return {value_ == 0 ? 0 : modulus_ - value_, modulus_, true};
}

FieldElement operator+(FieldElement a, FieldElement b) {
  check_same_modulus(a, b);
  const auto s = static_cast<std::uint64_t>(a.value_) + b.value_;
  return {static_cast<Coefficient>(s % a.modulus_), a.modulus_, true};
}

FieldElement operator-(FieldElement a, FieldElement b) { return a + (-b); }

FieldElement operator*(FieldElement a, FieldElement b) {
  check_same_modulus(a, b);
  const auto m = static_cast<std::uint64_t>(a.value_) * b.value_;
  return {static_cast<Coefficient>(m % a.modulus_), a.modulus_, true};
}

FieldElement operator/(FieldElement a, FieldElement b) {
  check_same_modulus(a, b);
  return a * b.inverse();
}

}  // namespace phrep
