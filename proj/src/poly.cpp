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

#include "ecstego/poly.hpp"

#include <algorithm>
#include <utility>

#include "ecstego/errors.hpp"

namespace ecstego {

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (a.modulus()->value() != b.modulus()->value()) {
    throw DomainError("polynomials have different moduli");
  }
}

}  // namespace

Polynomial::Polynomial(const PrimePtr& modulus) : modulus_(modulus) {
  if (!modulus_) throw DomainError("polynomial needs a modulus");
}

Polynomial Polynomial::zero(const PrimePtr& modulus) {
  return Polynomial(modulus);
}

Polynomial Polynomial::x(const PrimePtr& modulus) {
  return Polynomial({FieldElement::zero(modulus), FieldElement::one(modulus)});
}

Polynomial::Polynomial(std::vector<FieldElement> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw DomainError("coefficient list must be nonempty; use zero()");
  }
  modulus_ = coeffs_.front().modulus();
  for (const FieldElement& c : coeffs_) {
    if (c.modulus()->value() != modulus_->value()) {
      throw DomainError("polynomial coefficients have different moduli");
    }
  }
  strip();
}

Polynomial::Polynomial(std::vector<long> coeffs, const PrimePtr& modulus)
    : modulus_(modulus) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c, modulus);
  strip();
}

void Polynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coeff(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return FieldElement::zero(modulus_);
}

FieldElement Polynomial::leading() const {
  if (is_zero()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool Polynomial::is_monic() const {
  return !is_zero() && coeffs_.back() == FieldElement::one(modulus_);
}

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  FieldElement inv = leading().inv();
  std::vector<FieldElement> out;
  out.reserve(coeffs_.size());
  for (const FieldElement& c : coeffs_) out.push_back(c * inv);
  return Polynomial(std::move(out));
}

FieldElement Polynomial::eval(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(modulus_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (auto i = static_cast<long>(coeffs_.size()) - 1; i >= 0; --i) {
    const FieldElement& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    bool unit = c.residue() == 1;
    if (i == 0) {
      out += c.to_string();
    } else {
      if (!unit) out += c.to_string() + "*";
      out += (i == 1) ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<FieldElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff(i) + b.coeff(i));
  Polynomial r(a.modulus_);
  r.coeffs_ = std::move(out);
  r.strip();
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::vector<FieldElement> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.coeff(i) - b.coeff(i));
  Polynomial r(a.modulus_);
  r.coeffs_ = std::move(out);
  r.strip();
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.modulus_);
  std::vector<FieldElement> out(
      a.coeffs_.size() + b.coeffs_.size() - 1,
      FieldElement::zero(a.modulus_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
  }
  Polynomial r(a.modulus_);
  r.coeffs_ = std::move(out);
  r.strip();
  return r;
}

bool Polynomial::operator==(const Polynomial& other) const {
  require_same_field(*this, other);
  if (coeffs_.size() != other.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != other.coeffs_[i]) return false;
  }
  return true;
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a,
                                              const Polynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const PrimePtr& p = a.modulus();
  Polynomial q = Polynomial::zero(p);
  Polynomial r = a;
  FieldElement lead_inv = b.leading().inv();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
    FieldElement factor = r.leading() * lead_inv;
    // term = factor * x^shift
    std::vector<FieldElement> tc(shift + 1, FieldElement::zero(p));
    tc[shift] = factor;
    Polynomial term(std::move(tc));
    q = q + term;
    r = r - term * b;
  }
  return {std::move(q), std::move(r)};
}

Polynomial poly_mod(const Polynomial& a, const Polynomial& b) {
  return poly_divmod(a, b).second;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial poly_powmod(const Polynomial& base, const mpz_class& e,
                       const Polynomial& f) {
  if (e < 0) throw DomainError("poly_powmod: negative exponent");
  if (f.degree() < 1) throw DomainError("poly_powmod: constant modulus");
  const PrimePtr& p = base.modulus();
  Polynomial result({FieldElement::one(p)});
  Polynomial acc = poly_mod(base, f);
  std::size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = 0; i < nbits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) result = poly_mod(result * acc, f);
    if (i + 1 < nbits) acc = poly_mod(acc * acc, f);
  }
  return result;
}

Polynomial powmod_x_p(const Polynomial& f) {
  const PrimePtr& p = f.modulus();
  return poly_powmod(Polynomial::x(p), p->value(), f);
}

std::vector<FieldElement> roots_in_fp(const Polynomial& f, Rng& rng) {
  if (f.is_zero()) throw DomainError("every element is a root of zero");
  const PrimePtr& p = f.modulus();
  if (f.degree() == 0) return {};

  // Distinct-root part: gcd(f, x^p - x) is squarefree and splits into the
  // linear factors x - r over the roots r of f.
  Polynomial frob = powmod_x_p(f);
  Polynomial lin = poly_gcd(f, frob - Polynomial::x(p));

  std::vector<FieldElement> roots;
  std::vector<Polynomial> stack;
  if (lin.degree() >= 1) stack.push_back(lin);

  const mpz_class e = (p->value() - 1) / 2;
  const Polynomial one({FieldElement::one(p)});
  std::size_t budget = 64 * static_cast<std::size_t>(f.degree());

  while (!stack.empty()) {
    Polynomial g = stack.back();
    stack.pop_back();
    if (g.degree() == 1) {
      roots.push_back(-(g.coeff(0) / g.coeff(1)));
      continue;
    }
    // Random split: gcd(g, (x + c)^((p-1)/2) - 1) keeps the roots r where
    // r + c is a nonzero square; a fresh c separates some pair of roots
    // with probability about 1/2.
    for (;;) {
      if (budget == 0) throw InternalError("root splitting budget exhausted");
      --budget;
      FieldElement c = random_element(p, rng);
      Polynomial shifted({c, FieldElement::one(p)});
      Polynomial h = poly_powmod(shifted, e, g);
      Polynomial d = poly_gcd(g, h - one);
      if (d.degree() >= 1 && d.degree() < g.degree()) {
        stack.push_back(d);
        stack.push_back(poly_divmod(g, d).first);
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace ecstego
