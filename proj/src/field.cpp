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

#include "ecstego/field.hpp"

#include <cstring>
#include <utility>

#include "ecstego/errors.hpp"

namespace ecstego {

namespace {

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.modulus()->value() != b.modulus()->value()) {
    throw DomainError("field elements have different moduli");
  }
}

// Tonelli-Shanks for p = 1 (mod 4); `a` must be a nonzero quadratic
// residue. Deterministic: the auxiliary non-residue is the smallest one.
mpz_class tonelli_shanks(const mpz_class& a, const mpz_class& p) {
  mpz_class q = p - 1;
  unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

  mpz_class z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

  mpz_class c, t, r, e;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());

  unsigned long m = s;
  while (t != 1) {
    mpz_class t2 = t;
    unsigned long i = 0;
    while (t2 != 1) {
      t2 = (t2 * t2) % p;
      ++i;
      if (i == m) throw InternalError("tonelli_shanks: input not a residue");
    }
    mpz_class b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = (b * b) % p;
    m = i;
    c = (b * b) % p;
    t = (t * c) % p;
    r = (r * b) % p;
  }
  return r;
}

}  // namespace

Prime::Prime(mpz_class value) : value_(std::move(value)) {
  bits_ = mpz_sizeinbase(value_.get_mpz_t(), 2);
  mod3_ = static_cast<unsigned>(mpz_fdiv_ui(value_.get_mpz_t(), 3));
  mod4_ = static_cast<unsigned>(mpz_fdiv_ui(value_.get_mpz_t(), 4));
}

std::shared_ptr<const Prime> Prime::create(const mpz_class& value) {
  if (value < 3) throw DomainError("modulus must be a prime >= 3");
  if (mpz_probab_prime_p(value.get_mpz_t(), 64) == 0) {
    throw DomainError("modulus failed primality test");
  }
  return std::shared_ptr<const Prime>(new Prime(value));
}

FieldElement::FieldElement(mpz_class value, PrimePtr modulus)
    : value_(std::move(value)), modulus_(std::move(modulus)) {
  if (!modulus_) throw DomainError("field element needs a modulus");
  mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(), modulus_->value().get_mpz_t());
}

FieldElement::FieldElement(long value, const PrimePtr& modulus)
    : FieldElement(mpz_class(value), modulus) {}

FieldElement FieldElement::zero(const PrimePtr& modulus) {
  return FieldElement(0, modulus);
}

FieldElement FieldElement::one(const PrimePtr& modulus) {
  return FieldElement(1, modulus);
}

bool FieldElement::is_odd() const { return mpz_odd_p(value_.get_mpz_t()) != 0; }

FieldElement FieldElement::operator-() const {
  if (is_zero()) return *this;
  return FieldElement(modulus_->value() - value_, modulus_);
}

FieldElement FieldElement::inv() const {
  if (is_zero()) throw DomainError("inverse of zero");
  mpz_class r;
  mpz_invert(r.get_mpz_t(), value_.get_mpz_t(), modulus_->value().get_mpz_t());
  return FieldElement(std::move(r), modulus_);
}

FieldElement FieldElement::pow(const mpz_class& e) const {
  if (e < 0) throw DomainError("pow: negative exponent");
  mpz_class r;
  mpz_powm(r.get_mpz_t(), value_.get_mpz_t(), e.get_mpz_t(),
           modulus_->value().get_mpz_t());
  return FieldElement(std::move(r), modulus_);
}

int FieldElement::legendre() const {
  return mpz_legendre(value_.get_mpz_t(), modulus_->value().get_mpz_t());
}

std::optional<FieldElement> FieldElement::sqrt() const {
  if (is_zero()) return *this;
  if (legendre() != 1) return std::nullopt;
  const mpz_class& p = modulus_->value();
  mpz_class r;
  if (modulus_->mod4() == 3) {
    mpz_class e = (p + 1) / 4;
    mpz_powm(r.get_mpz_t(), value_.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  } else {
    r = tonelli_shanks(value_, p);
  }
  return FieldElement(std::move(r), modulus_);
}

FieldElement FieldElement::cube_root() const {
  if (modulus_->mod3() != 2) {
    throw DomainError("cube_root requires p = 2 (mod 3)");
  }
  // x -> x^3 is a bijection; its inverse is x -> x^((2p-1)/3) since
  // 3 * (2p-1)/3 = 2(p-1) + 1.
  mpz_class e = (2 * modulus_->value() - 1) / 3;
  return pow(e);
}

Bytes FieldElement::to_bytes() const {
  std::size_t width = modulus_->byte_length();
  Bytes out(width, 0);
  if (value_ != 0) {
    std::size_t count = (mpz_sizeinbase(value_.get_mpz_t(), 2) + 7) / 8;
    mpz_export(out.data() + (width - count), &count, 1, 1, 0, 0,
               value_.get_mpz_t());
  }
  return out;
}

FieldElement FieldElement::from_bytes(const Bytes& data,
                                      const PrimePtr& modulus) {
  if (data.size() != modulus->byte_length()) {
    throw FormatError("field element has wrong byte length");
  }
  mpz_class v;
  mpz_import(v.get_mpz_t(), data.size(), 1, 1, 0, 0, data.data());
  if (v >= modulus->value()) {
    throw FormatError("field element out of range");
  }
  return FieldElement(std::move(v), modulus);
}

std::string FieldElement::to_string() const { return value_.get_str(); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.value_ + b.value_, a.modulus_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.value_ - b.value_, a.modulus_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.value_ * b.value_, a.modulus_);
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a * b.inv();
}

bool FieldElement::operator==(const FieldElement& other) const {
  require_same_field(*this, other);
  return value_ == other.value_;
}

bool FieldElement::operator<(const FieldElement& other) const {
  require_same_field(*this, other);
  return value_ < other.value_;
}

FieldElement random_element(const PrimePtr& modulus, Rng& rng) {
  return FieldElement(rng.below(modulus->value()), modulus);
}

}  // namespace ecstego
