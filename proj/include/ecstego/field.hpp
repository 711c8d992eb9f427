// Copyright 2026 The Ecstego Authors.
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

#ifndef ECSTEGO_FIELD_HPP_
#define ECSTEGO_FIELD_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "ecstego/bytes.hpp"
#include "ecstego/rng.hpp"

namespace ecstego {

// An odd prime modulus, validated at construction (64 Miller-Rabin rounds).
// Shared immutably between all elements of the field it defines.
class Prime {
 public:
  // Throws DomainError unless value is a prime >= 3.
  static std::shared_ptr<const Prime> create(const mpz_class& value);

  const mpz_class& value() const { return value_; }
  std::size_t bits() const { return bits_; }          // k = bit length of p
  std::size_t byte_length() const { return (bits_ + 7) / 8; }
  unsigned mod3() const { return mod3_; }
  unsigned mod4() const { return mod4_; }

 private:
  explicit Prime(mpz_class value);

  mpz_class value_;
  std::size_t bits_;
  unsigned mod3_;
  unsigned mod4_;
};

using PrimePtr = std::shared_ptr<const Prime>;

// Canonical residue in [0, p). Value type; every operation reduces.
// Arithmetic between elements of different fields throws DomainError.
class FieldElement {
 public:
  FieldElement(mpz_class value, PrimePtr modulus);  // reduces value mod p
  FieldElement(long value, const PrimePtr& modulus);

  static FieldElement zero(const PrimePtr& modulus);
  static FieldElement one(const PrimePtr& modulus);

  const mpz_class& residue() const { return value_; }
  const PrimePtr& modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }
  bool is_odd() const;  // least significant bit of the canonical residue

  FieldElement operator-() const;
  FieldElement inv() const;                    // throws DomainError on 0
  FieldElement pow(const mpz_class& e) const;  // e >= 0; 0^0 = 1
  int legendre() const;                        // Euler criterion: -1, 0, +1
  // Canonical square root: p = 3 (mod 4) uses the (p+1)/4 exponent,
  // otherwise Tonelli-Shanks. Empty for quadratic non-residues.
  std::optional<FieldElement> sqrt() const;
  // Unique cube root; requires p = 2 (mod 3), where cubing is a bijection.
  FieldElement cube_root() const;

  // Fixed-width big-endian serialization, ceil(k/8) bytes.
  Bytes to_bytes() const;
  static FieldElement from_bytes(const Bytes& data, const PrimePtr& modulus);
  std::string to_string() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

  bool operator==(const FieldElement& other) const;
  bool operator!=(const FieldElement& other) const { return !(*this == other); }
  // Residue order; both operands must share a field (used for slot sorting
  // and map keys).
  bool operator<(const FieldElement& other) const;

 private:
  mpz_class value_;
  PrimePtr modulus_;
};

// Uniform over [0, p) by rejection sampling on k-bit draws.
FieldElement random_element(const PrimePtr& modulus, Rng& rng);

}  // namespace ecstego

#endif  // ECSTEGO_FIELD_HPP_
