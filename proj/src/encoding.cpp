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

#include "ecstego/encoding.hpp"

#include <algorithm>

#include "ecstego/errors.hpp"
#include "ecstego/poly.hpp"

namespace ecstego {

namespace {

// Nonzero quadratic character of t; callers rule out t = 0 beforehand.
int chi(const FieldElement& t) { return t.legendre(); }

CurvePoint point_of(const CurveParams&, const FieldElement& x,
                    const FieldElement& y) {
  return CurvePoint::affine(x.residue(), y.residue());
}

// Resolves the sign ambiguity of a candidate square root: keeps whichever
// of +-r maps forward onto the target. On a group of odd order the two
// signs hit distinct points (P = -P would need y = 0), so at most one
// survives. Returns empty when neither does, which is how algebraically
// spurious candidates are dropped.
template <typename Forward>
std::optional<FieldElement> verify_either_sign(const FieldElement& r,
                                               const CurvePoint& target,
                                               Forward&& forward) {
  if (forward(r) == target) return r;
  FieldElement neg = -r;
  if (forward(neg) == target) return neg;
  return std::nullopt;
}

// Appends u to the first empty slot unless an equal value already sits in
// an earlier one; duplicate candidates would skew uniform slot sampling.
void place(PreimageSlots& slots, std::size_t index,
           const std::optional<FieldElement>& u) {
  if (!u.has_value()) return;
  for (std::size_t i = 0; i < index; ++i) {
    if (slots[i].has_value() && slots[i]->residue() == u->residue()) return;
  }
  slots[index] = u;
}

}  // namespace

std::string encoding_name(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::kIcart:
      return "icart";
    case EncodingKind::kSW:
      return "sw";
    case EncodingKind::kSWU:
      return "swu";
  }
  throw DomainError("unreachable encoding kind");
}

EncodingKind encoding_from_name(const std::string& name) {
  if (name == "icart") return EncodingKind::kIcart;
  if (name == "sw") return EncodingKind::kSW;
  if (name == "swu") return EncodingKind::kSWU;
  throw DomainError("unknown encoding: " + name);
}

bool encoding_applicable(EncodingKind kind, const CurveParams& curve) {
  switch (kind) {
    case EncodingKind::kIcart:
      return curve.field()->mod3() == 2;
    case EncodingKind::kSW:
      // y^2 = x^3 + b and sqrt(-3) must exist, i.e. p = 1 (mod 3).
      return curve.a().is_zero() && !curve.b().is_zero() &&
             curve.field()->mod3() == 1;
    case EncodingKind::kSWU:
      return !curve.a().is_zero() && !curve.b().is_zero() &&
             curve.field()->mod4() == 3;
  }
  return false;
}

std::size_t slot_count(const PreimageSlots& slots) {
  std::size_t n = 0;
  for (const auto& s : slots) {
    if (s.has_value()) ++n;
  }
  return n;
}

bool slot_contains(const PreimageSlots& slots, const FieldElement& u) {
  for (const auto& s : slots) {
    if (s.has_value() && s->residue() == u.residue()) return true;
  }
  return false;
}

CurvePoint icart_forward(const CurveParams& curve, const FieldElement& u) {
  const PrimePtr& fp = curve.field();
  if (fp->mod3() != 2) throw DomainError("icart needs p = 2 (mod 3)");
  if (u.is_zero()) return CurvePoint::make_infinity();

  FieldElement three(3, fp);
  FieldElement u2 = u * u;
  FieldElement u4 = u2 * u2;
  FieldElement v = (three * curve.a() - u4) / (FieldElement(6, fp) * u);
  // x = cbrt(v^2 - b - u^6/27) + u^2/3, y = u*x + v.
  FieldElement arg = v * v - curve.b() - u4 * u2 / FieldElement(27, fp);
  FieldElement x = arg.cube_root() + u2 / three;
  FieldElement y = u * x + v;
  return point_of(curve, x, y);
}

CurvePoint sw_forward(const CurveParams& curve, const FieldElement& t) {
  const PrimePtr& fp = curve.field();
  if (!encoding_applicable(EncodingKind::kSW, curve)) {
    throw DomainError("sw needs y^2 = x^3 + b with p = 1 (mod 3)");
  }
  FieldElement one = FieldElement::one(fp);
  FieldElement denom = one + curve.b() + t * t;
  if (t.is_zero() || denom.is_zero()) return CurvePoint::make_infinity();

  FieldElement c1 = *FieldElement(-3, fp).sqrt();
  FieldElement half = FieldElement(2, fp).inv();
  FieldElement frac = c1 * t * t / denom;
  FieldElement x1 = (c1 - one) * half - frac;
  FieldElement x2 = (-c1 - one) * half + frac;
  FieldElement x3 = one - denom * denom / (FieldElement(3, fp) * t * t);

  FieldElement sign(chi(t), fp);
  for (const FieldElement& x : {x1, x2, x3}) {
    FieldElement g = curve.rhs(x);
    if (auto r = g.sqrt()) return point_of(curve, x, sign * *r);
  }
  // g(x1) g(x2) g(x3) is always a square, so some branch must succeed.
  throw InternalError("sw_forward: no square branch");
}

CurvePoint swu_forward(const CurveParams& curve, const FieldElement& t) {
  const PrimePtr& fp = curve.field();
  if (!encoding_applicable(EncodingKind::kSWU, curve)) {
    throw DomainError("swu needs a, b != 0 and p = 3 (mod 4)");
  }
  FieldElement t2 = t * t;
  FieldElement h = t2 * t2 - t2;
  if (h.is_zero()) return CurvePoint::make_infinity();

  FieldElement one = FieldElement::one(fp);
  FieldElement x1 = -curve.b() / curve.a() * (one + h.inv());
  FieldElement x2 = -t2 * x1;

  FieldElement sign(chi(t), fp);
  for (const FieldElement& x : {x1, x2}) {
    FieldElement g = curve.rhs(x);
    if (auto r = g.sqrt()) return point_of(curve, x, sign * *r);
  }
  // g(x2) = -t^6 g(x1) and -1 is a non-residue, so one branch is square.
  throw InternalError("swu_forward: no square branch");
}

PreimageSlots icart_preimages(const CurveParams& curve, const CurvePoint& point,
                              Rng& rng) {
  PreimageSlots slots;
  if (point.infinity) return slots;  // u = 0 is a convention, not a preimage
  const PrimePtr& fp = curve.field();

  // Any u with f(u) = (x, y) satisfies u^4 - 6x u^2 + 6y u - 3a = 0:
  // substitute v = y - u x into the defining relation of v. Spurious roots
  // are removed by the forward check.
  FieldElement x(point.x, fp);
  FieldElement y(point.y, fp);
  Polynomial quartic({FieldElement(-3, fp) * curve.a(), FieldElement(6, fp) * y,
                      FieldElement(-6, fp) * x, FieldElement::zero(fp),
                      FieldElement::one(fp)});
  std::vector<FieldElement> keep;
  for (const FieldElement& u : roots_in_fp(quartic, rng)) {
    if (icart_forward(curve, u) == point) keep.push_back(u);
  }
  std::sort(keep.begin(), keep.end());
  for (std::size_t i = 0; i < keep.size() && i < 4; ++i) slots[i] = keep[i];
  return slots;
}

PreimageSlots sw_preimages(const CurveParams& curve, const CurvePoint& point) {
  PreimageSlots slots;
  if (point.infinity) return slots;
  const PrimePtr& fp = curve.field();
  auto forward = [&](const FieldElement& t) { return sw_forward(curve, t); };

  FieldElement one = FieldElement::one(fp);
  FieldElement x(point.x, fp);
  FieldElement c1 = *FieldElement(-3, fp).sqrt();
  FieldElement z = FieldElement(2, fp) * x + one;
  FieldElement bp1 = curve.b() + one;

  // Branch equations solved for t^2: x1(t) = x gives slot 0, x2(t) = x
  // slot 1, x3(t) = x the quadratic behind slots 2 and 3.
  std::array<std::optional<FieldElement>, 4> squares;
  if (!(c1 + z).is_zero()) squares[0] = bp1 * (c1 - z) / (c1 + z);
  if (!(c1 - z).is_zero()) squares[1] = bp1 * (c1 + z) / (c1 - z);
  FieldElement lin = FieldElement(3, fp) * x + curve.b() + curve.b() - one;
  FieldElement disc = lin * lin - FieldElement(4, fp) * bp1 * bp1;
  if (auto rd = disc.sqrt()) {
    FieldElement half = FieldElement(2, fp).inv();
    squares[2] = (-lin + *rd) * half;
    squares[3] = (-lin - *rd) * half;
  }

  for (std::size_t i = 0; i < 4; ++i) {
    if (!squares[i].has_value()) continue;
    auto root = squares[i]->sqrt();
    if (!root.has_value()) continue;
    place(slots, i, verify_either_sign(*root, point, forward));
  }
  return slots;
}

PreimageSlots swu_preimages(const CurveParams& curve, const CurvePoint& point) {
  PreimageSlots slots;
  if (point.infinity) return slots;
  const PrimePtr& fp = curve.field();
  auto forward = [&](const FieldElement& t) { return swu_forward(curve, t); };

  FieldElement one = FieldElement::one(fp);
  FieldElement x(point.x, fp);
  FieldElement four(4, fp);
  FieldElement half = FieldElement(2, fp).inv();

  // x1(t) = x reduces to t^4 - t^2 + b/(ax+b) = 0, a quadratic in t^2 with
  // discriminant d1; x2(t) = x to t^4 - e t^2 + e = 0 with e = ax/b + 1 and
  // discriminant d2 = e^2 - 4e.
  std::array<std::optional<FieldElement>, 4> squares;
  FieldElement axb = curve.a() * x + curve.b();
  if (!axb.is_zero()) {
    FieldElement d1 = one - four * curve.b() / axb;
    if (auto rd = d1.sqrt()) {
      squares[0] = (one - *rd) * half;
      squares[1] = (one + *rd) * half;
    }
  }
  FieldElement e = curve.a() * x / curve.b() + one;
  FieldElement d2 = e * e - four * e;
  if (auto rd = d2.sqrt()) {
    squares[2] = (e - *rd) * half;
    squares[3] = (e + *rd) * half;
  }

  for (std::size_t i = 0; i < 4; ++i) {
    if (!squares[i].has_value()) continue;
    auto root = squares[i]->sqrt();
    if (!root.has_value()) continue;
    place(slots, i, verify_either_sign(*root, point, forward));
  }
  return slots;
}

CurvePoint encode_to_curve(EncodingKind kind, const CurveParams& curve,
                           const FieldElement& u) {
  switch (kind) {
    case EncodingKind::kIcart:
      return icart_forward(curve, u);
    case EncodingKind::kSW:
      return sw_forward(curve, u);
    case EncodingKind::kSWU:
      return swu_forward(curve, u);
  }
  throw DomainError("unreachable encoding kind");
}

PreimageSlots preimages(EncodingKind kind, const CurveParams& curve,
                        const CurvePoint& point, Rng& rng) {
  switch (kind) {
    case EncodingKind::kIcart:
      return icart_preimages(curve, point, rng);
    case EncodingKind::kSW:
      return sw_preimages(curve, point);
    case EncodingKind::kSWU:
      return swu_preimages(curve, point);
  }
  throw DomainError("unreachable encoding kind");
}

}  // namespace ecstego
