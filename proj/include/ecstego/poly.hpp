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

#ifndef ECSTEGO_POLY_HPP_
#define ECSTEGO_POLY_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ecstego/field.hpp"
#include "ecstego/rng.hpp"

namespace ecstego {

// Dense univariate polynomial over F_p, coefficients low-to-high with the
// trailing zeros stripped (so the zero polynomial has no coefficients).
class Polynomial {
 public:
  static Polynomial zero(const PrimePtr& modulus);
  static Polynomial x(const PrimePtr& modulus);
  // Coefficients low-to-high; must be nonempty and share one field.
  explicit Polynomial(std::vector<FieldElement> coeffs);
  Polynomial(std::vector<long> coeffs, const PrimePtr& modulus);

  const PrimePtr& modulus() const { return modulus_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  // Coefficient of x^i, zero beyond the degree.
  FieldElement coeff(std::size_t i) const;
  FieldElement leading() const;  // throws DomainError on the zero polynomial
  bool is_monic() const;
  Polynomial monic() const;  // divide by the leading coefficient

  FieldElement eval(const FieldElement& x) const;
  std::string to_string() const;  // e.g. "x^2 + 3*x + 2"

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

 private:
  explicit Polynomial(const PrimePtr& modulus);
  void strip();

  std::vector<FieldElement> coeffs_;
  PrimePtr modulus_;
};

// Euclidean division; divisor must be nonzero. Returns {quotient, remainder}.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a,
                                              const Polynomial& b);
Polynomial poly_mod(const Polynomial& a, const Polynomial& b);
// Monic greatest common divisor (zero if both inputs are zero).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
// base^e mod f by square-and-multiply; e >= 0, f nonconstant.
Polynomial poly_powmod(const Polynomial& base, const mpz_class& e,
                       const Polynomial& f);
// x^p mod f, the Frobenius image used for root finding.
Polynomial powmod_x_p(const Polynomial& f);

// All roots of f in F_p, sorted by residue, without multiplicity.
// Cantor-Zassenhaus style: strip to the squarefree part of gcd(f, x^p - x),
// then split with random (x + c)^((p-1)/2) factors.
std::vector<FieldElement> roots_in_fp(const Polynomial& f, Rng& rng);

}  // namespace ecstego

#endif  // ECSTEGO_POLY_HPP_
