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

#include "ecstego/curve.hpp"

#include <map>
#include <utility>

#include "ecstego/errors.hpp"

namespace ecstego {

CurvePoint CurvePoint::affine(mpz_class x, mpz_class y) {
  CurvePoint pt;
  pt.infinity = false;
  pt.x = std::move(x);
  pt.y = std::move(y);
  return pt;
}

bool CurvePoint::operator==(const CurvePoint& other) const {
  if (infinity || other.infinity) return infinity == other.infinity;
  return x == other.x && y == other.y;
}

bool CurvePoint::operator<(const CurvePoint& other) const {
  if (infinity != other.infinity) return infinity;
  if (infinity) return false;
  if (x != other.x) return x < other.x;
  return y < other.y;
}

std::string CurvePoint::to_string() const {
  if (infinity) return "infinity";
  return "(" + x.get_str() + ", " + y.get_str() + ")";
}

CurveParams::CurveParams(std::string name, PrimePtr field, FieldElement a,
                         FieldElement b, CurvePoint g, mpz_class q)
    : name_(std::move(name)),
      field_(std::move(field)),
      a_(std::move(a)),
      b_(std::move(b)),
      g_(std::move(g)),
      q_(std::move(q)) {}

std::shared_ptr<const CurveParams> CurveParams::create(
    std::string name, const mpz_class& p, const mpz_class& a,
    const mpz_class& b, const CurvePoint& g, const mpz_class& q) {
  PrimePtr field = Prime::create(p);
  FieldElement fa(a, field);
  FieldElement fb(b, field);

  // 4a^3 + 27b^2 != 0 rules out singular curves.
  FieldElement disc = FieldElement(4, field) * fa * fa * fa +
                      FieldElement(27, field) * fb * fb;
  if (disc.is_zero()) throw DomainError(name + ": singular curve");

  if (q < 2 || mpz_probab_prime_p(q.get_mpz_t(), 64) == 0) {
    throw DomainError(name + ": group order must be prime");
  }

  auto curve = std::shared_ptr<const CurveParams>(
      new CurveParams(std::move(name), std::move(field), std::move(fa),
                      std::move(fb), g, q));
  if (g.infinity || !curve->on_curve(g)) {
    throw DomainError(curve->name() + ": base point not on curve");
  }
  if (!curve->scalar_mul(q, g).infinity) {
    throw DomainError(curve->name() + ": base point order is not q");
  }
  return curve;
}

FieldElement CurveParams::rhs(const FieldElement& x) const {
  return x * x * x + a_ * x + b_;
}

bool CurveParams::on_curve(const CurvePoint& pt) const {
  if (pt.infinity) return true;
  if (pt.x < 0 || pt.x >= p() || pt.y < 0 || pt.y >= p()) return false;
  FieldElement x(pt.x, field_);
  FieldElement y(pt.y, field_);
  return y * y == rhs(x);
}

CurvePoint CurveParams::neg(const CurvePoint& pt) const {
  if (pt.infinity) return pt;
  if (pt.y == 0) return pt;
  return CurvePoint::affine(pt.x, p() - pt.y);
}

CurvePoint CurveParams::dbl(const CurvePoint& pt) const {
  if (pt.infinity) return pt;
  if (pt.y == 0) return CurvePoint::make_infinity();
  FieldElement x(pt.x, field_);
  FieldElement y(pt.y, field_);
  FieldElement three(3, field_);
  FieldElement lambda = (three * x * x + a_) / (y + y);
  FieldElement x3 = lambda * lambda - x - x;
  FieldElement y3 = lambda * (x - x3) - y;
  return CurvePoint::affine(x3.residue(), y3.residue());
}

CurvePoint CurveParams::add(const CurvePoint& lhs, const CurvePoint& rhs) const {
  if (lhs.infinity) return rhs;
  if (rhs.infinity) return lhs;
  if (lhs.x == rhs.x) {
    if ((lhs.y + rhs.y) % p() == 0) return CurvePoint::make_infinity();
    return dbl(lhs);
  }
  FieldElement x1(lhs.x, field_);
  FieldElement y1(lhs.y, field_);
  FieldElement x2(rhs.x, field_);
  FieldElement y2(rhs.y, field_);
  FieldElement lambda = (y2 - y1) / (x2 - x1);
  FieldElement x3 = lambda * lambda - x1 - x2;
  FieldElement y3 = lambda * (x1 - x3) - y1;
  return CurvePoint::affine(x3.residue(), y3.residue());
}

CurvePoint CurveParams::scalar_mul(const mpz_class& n, const CurvePoint& pt) const {
  if (n == 0 || pt.infinity) return CurvePoint::make_infinity();
  if (n < 0) return scalar_mul(-n, neg(pt));
  CurvePoint acc = CurvePoint::make_infinity();
  std::size_t nbits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = nbits; i-- > 0;) {
    acc = dbl(acc);
    if (mpz_tstbit(n.get_mpz_t(), i)) acc = add(acc, pt);
  }
  return acc;
}

Bytes CurveParams::serialize_point(const CurvePoint& pt) const {
  if (pt.infinity) return Bytes{0x00};
  Bytes out{0x04};
  Bytes xb = FieldElement(pt.x, field_).to_bytes();
  Bytes yb = FieldElement(pt.y, field_).to_bytes();
  out.insert(out.end(), xb.begin(), xb.end());
  out.insert(out.end(), yb.begin(), yb.end());
  return out;
}

CurvePoint CurveParams::deserialize_point(const Bytes& data) const {
  if (data.size() == 1 && data[0] == 0x00) return CurvePoint::make_infinity();
  std::size_t width = field_->byte_length();
  if (data.size() != 1 + 2 * width || data[0] != 0x04) {
    throw FormatError("malformed point encoding");
  }
  Bytes xb(data.begin() + 1, data.begin() + 1 + static_cast<long>(width));
  Bytes yb(data.begin() + 1 + static_cast<long>(width), data.end());
  FieldElement x = FieldElement::from_bytes(xb, field_);
  FieldElement y = FieldElement::from_bytes(yb, field_);
  CurvePoint pt = CurvePoint::affine(x.residue(), y.residue());
  if (!on_curve(pt)) throw FormatError("point not on curve");
  return pt;
}

namespace {

std::map<std::string, CurvePtr> build_registry() {
  std::map<std::string, CurvePtr> reg;

  // NIST P-256 (FIPS 186-4, also secp256r1).
  {
    mpz_class p("ffffffff00000001000000000000000000000000ffffffffffffffffffffffff",
                16);
    mpz_class b("5ac635d8aa3a93e7b3ebbd55769886bc651d06b0cc53b0f63bce3c3e27d2604b",
                16);
    mpz_class gx("6b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296",
                 16);
    mpz_class gy("4fe342e2fe1a7f9b8ee7eb4a7c0f9e162bce33576b315ececbb6406837bf51f5",
                 16);
    mpz_class n("ffffffff00000000ffffffffffffffffbce6faada7179e84f3b9cac2fc632551",
                16);
    reg["p256"] = CurveParams::create("p256", p, p - 3, b,
                                      CurvePoint::affine(gx, gy), n);
  }

  // NIST P-384 (FIPS 186-4).
  {
    mpz_class p(
        "fffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffffe"
        "ffffffff0000000000000000ffffffff",
        16);
    mpz_class b(
        "b3312fa7e23ee7e4988e056be3f82d19181d9c6efe8141120314088f5013875a"
        "c656398d8a2ed19d2a85c8edd3ec2aef",
        16);
    mpz_class gx(
        "aa87ca22be8b05378eb1c71ef320ad746e1d3b628ba79b9859f741e082542a38"
        "5502f25dbf55296c3a545e3872760ab7",
        16);
    mpz_class gy(
        "3617de4a96262c6f5d9e98bf9292dc29f8f41dbd289a147ce9da3113b5f0b8c0"
        "0a60b1ce1d7e819d7a431d7c90ea0e5f",
        16);
    mpz_class n(
        "ffffffffffffffffffffffffffffffffffffffffffffffffc7634d81f4372ddf"
        "581a0db248b0a77aecec196accc52973",
        16);
    reg["p384"] = CurveParams::create("p384", p, p - 3, b,
                                      CurvePoint::affine(gx, gy), n);
  }

  // secp256k1 (SEC 2).
  {
    mpz_class p("fffffffffffffffffffffffffffffffffffffffffffffffffffffffefffffc2f",
                16);
    mpz_class gx("79be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798",
                 16);
    mpz_class gy("483ada7726a3c4655da4fbfc0e1108a8fd17b448a68554199c47d08ffb10d4b8",
                 16);
    mpz_class n("fffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364141",
                16);
    reg["secp256k1"] = CurveParams::create("secp256k1", p, 0, 7,
                                           CurvePoint::affine(gx, gy), n);
  }

  // Toy curves for exhaustive oracles. toy-1019 has p = 2 (mod 3) and
  // p = 3 (mod 4); toy-1039 has p = 1 (mod 3) with a = 0, the j = 0 shape.
  // Both groups have prime order 1033.
  reg["toy-1019"] = CurveParams::create("toy-1019", 1019, 1, 20,
                                        CurvePoint::affine(0, 64), 1033);
  reg["toy-1039"] = CurveParams::create("toy-1039", 1039, 0, 6,
                                        CurvePoint::affine(1, 79), 1033);
  return reg;
}

const std::map<std::string, CurvePtr>& registry() {
  static const std::map<std::string, CurvePtr> reg = build_registry();
  return reg;
}

}  // namespace

CurvePtr registry_get(const std::string& name) {
  const auto& reg = registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw DomainError("unknown curve: " + name);
  return it->second;
}

std::vector<std::string> registry_names() {
  std::vector<std::string> names;
  for (const auto& [name, curve] : registry()) names.push_back(name);
  return names;
}

}  // namespace ecstego
