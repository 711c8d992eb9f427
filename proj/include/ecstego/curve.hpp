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

#ifndef ECSTEGO_CURVE_HPP_
#define ECSTEGO_CURVE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ecstego/bytes.hpp"
#include "ecstego/field.hpp"

namespace ecstego {

// Affine point on a short Weierstrass curve, or the point at infinity.
// Comparisons order infinity first, then (x, y) lexicographically.
struct CurvePoint {
  bool infinity = true;
  mpz_class x;
  mpz_class y;

  static CurvePoint make_infinity() { return CurvePoint{}; }
  static CurvePoint affine(mpz_class x, mpz_class y);

  bool operator==(const CurvePoint& other) const;
  bool operator!=(const CurvePoint& other) const { return !(*this == other); }
  bool operator<(const CurvePoint& other) const;
  std::string to_string() const;
};

// Domain parameters for y^2 = x^3 + a*x + b over F_p with a base point g
// of prime order q. create() validates: p prime, nonsingular curve, g on
// the curve, q prime, and q*g = infinity.
class CurveParams {
 public:
  static std::shared_ptr<const CurveParams> create(std::string name,
                                                   const mpz_class& p,
                                                   const mpz_class& a,
                                                   const mpz_class& b,
                                                   const CurvePoint& g,
                                                   const mpz_class& q);

  const std::string& name() const { return name_; }
  const PrimePtr& field() const { return field_; }
  const mpz_class& p() const { return field_->value(); }
  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  const CurvePoint& g() const { return g_; }
  const mpz_class& q() const { return q_; }

  // Right-hand side x^3 + a*x + b.
  FieldElement rhs(const FieldElement& x) const;
  bool on_curve(const CurvePoint& pt) const;

  CurvePoint add(const CurvePoint& lhs, const CurvePoint& rhs) const;
  CurvePoint dbl(const CurvePoint& pt) const;
  CurvePoint neg(const CurvePoint& pt) const;
  // n may be any integer (reduced mod q implicitly only by group order).
  CurvePoint scalar_mul(const mpz_class& n, const CurvePoint& pt) const;

  // 0x00 for infinity; otherwise 0x04 || x || y with fixed-width
  // big-endian coordinates of ceil(k/8) bytes each.
  Bytes serialize_point(const CurvePoint& pt) const;
  // Throws FormatError on bad tag, bad length, or off-curve coordinates.
  CurvePoint deserialize_point(const Bytes& data) const;

 private:
  CurveParams(std::string name, PrimePtr field, FieldElement a, FieldElement b,
              CurvePoint g, mpz_class q);

  std::string name_;
  PrimePtr field_;
  FieldElement a_;
  FieldElement b_;
  CurvePoint g_;
  mpz_class q_;
};

using CurvePtr = std::shared_ptr<const CurveParams>;

// Built-in curves: "p256", "p384", "secp256k1", "toy-1019", "toy-1039".
// Throws DomainError for unknown names.
CurvePtr registry_get(const std::string& name);
std::vector<std::string> registry_names();

}  // namespace ecstego

#endif  // ECSTEGO_CURVE_HPP_
