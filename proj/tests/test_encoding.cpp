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

#include <map>
#include <set>
#include <vector>

#include "doctest.h"

#include "ecstego/curve.hpp"
#include "ecstego/encoding.hpp"
#include "ecstego/errors.hpp"
#include "ecstego/rng.hpp"

using namespace ecstego;

namespace {

std::set<mpz_class> slot_set(const PreimageSlots& slots) {
  std::set<mpz_class> out;
  for (const auto& s : slots) {
    if (s.has_value()) out.insert(s->residue());
  }
  return out;
}

// Exhaustive forward enumeration: point -> set of inputs mapping to it.
std::map<CurvePoint, std::set<mpz_class>> brute_preimages(
    EncodingKind kind, const CurveParams& curve) {
  std::map<CurvePoint, std::set<mpz_class>> out;
  for (mpz_class u = 0; u < curve.p(); ++u) {
    const CurvePoint pt =
        encode_to_curve(kind, curve, FieldElement(u, curve.field()));
    out[pt].insert(u);
  }
  return out;
}

// All points of a prime-order toy group, including infinity.
std::vector<CurvePoint> all_points(const CurveParams& curve) {
  std::vector<CurvePoint> pts;
  CurvePoint acc = CurvePoint::make_infinity();
  for (mpz_class i = 0; i < curve.q(); ++i) {
    pts.push_back(acc);
    acc = curve.add(acc, curve.g());
  }
  return pts;
}

void check_completeness(EncodingKind kind, const CurvePtr& curve) {
  DeterministicRng rng(std::uint64_t{11});
  const auto brute = brute_preimages(kind, *curve);
  std::size_t degenerate = 0;
  const auto inf_it = brute.find(CurvePoint::make_infinity());
  if (inf_it != brute.end()) degenerate = inf_it->second.size();
  std::size_t covered = 0;
  for (const CurvePoint& pt : all_points(*curve)) {
    const PreimageSlots slots = preimages(kind, *curve, pt, rng);
    if (pt.infinity) {
      // Degenerate inputs are a forward convention, never inverted.
      CHECK(slot_count(slots) == 0);
      continue;
    }
    const auto it = brute.find(pt);
    const std::set<mpz_class> expected =
        it == brute.end() ? std::set<mpz_class>{} : it->second;
    CHECK(slot_set(slots) == expected);
    CHECK(slot_count(slots) <= 4);
    if (!expected.empty()) ++covered;
  }
  // The subgroup walk visits the whole curve (prime order = #E), so every
  // finite image point is covered; the image is a proper subset of E.
  const std::size_t finite_image = brute.size() - (degenerate > 0 ? 1 : 0);
  CHECK(covered == finite_image);
  CHECK(covered + 1 < static_cast<std::size_t>(curve->q().get_ui()));
}

}  // namespace

TEST_CASE("applicability matrix over the registry") {
  struct Row {
    const char* curve;
    bool icart, sw, swu;
  };
  // icart: p = 2 (mod 3); sw: a = 0, b != 0, p = 1 (mod 3);
  // swu: a, b != 0, p = 3 (mod 4).
  const Row rows[] = {
      {"p256", false, false, true},
      {"p384", true, false, true},
      {"secp256k1", false, true, false},
      {"toy-1019", true, false, true},
      {"toy-1039", false, true, false},
  };
  for (const Row& row : rows) {
    const CurvePtr c = registry_get(row.curve);
    CHECK(encoding_applicable(EncodingKind::kIcart, *c) == row.icart);
    CHECK(encoding_applicable(EncodingKind::kSW, *c) == row.sw);
    CHECK(encoding_applicable(EncodingKind::kSWU, *c) == row.swu);
  }
}

TEST_CASE("encoding names round trip") {
  for (EncodingKind kind :
       {EncodingKind::kIcart, EncodingKind::kSW, EncodingKind::kSWU}) {
    CHECK(encoding_from_name(encoding_name(kind)) == kind);
  }
  CHECK_THROWS_AS(encoding_from_name("elligator"), DomainError);
  CHECK_THROWS_AS(encoding_from_name("ICART"), DomainError);
}

TEST_CASE("inapplicable encodings are refused") {
  const CurvePtr toy19 = registry_get("toy-1019");
  const CurvePtr toy39 = registry_get("toy-1039");
  const FieldElement u19(5, toy19->field());
  const FieldElement u39(5, toy39->field());
  CHECK_THROWS_AS(sw_forward(*toy19, u19), DomainError);
  CHECK_THROWS_AS(icart_forward(*toy39, u39), DomainError);
  CHECK_THROWS_AS(swu_forward(*toy39, u39), DomainError);
  CHECK_THROWS_AS(encode_to_curve(EncodingKind::kSW, *toy19, u19),
                  DomainError);
}

TEST_CASE("icart degenerate convention: only u = 0 maps to infinity") {
  const CurvePtr c = registry_get("toy-1019");
  std::size_t inf_count = 0;
  for (long u = 0; u < 1019; ++u) {
    if (icart_forward(*c, FieldElement(u, c->field())).infinity) ++inf_count;
  }
  CHECK(inf_count == 1);
  CHECK(icart_forward(*c, FieldElement::zero(c->field())).infinity);
}

TEST_CASE("icart forward lands on the curve, 1000 random inputs") {
  const CurvePtr c = registry_get("toy-1019");
  DeterministicRng rng(std::uint64_t{12});
  for (int i = 0; i < 1000; ++i) {
    CHECK(c->on_curve(icart_forward(*c, random_element(c->field(), rng))));
  }
}

TEST_CASE("icart outputs satisfy the defining quartic") {
  // u^4 - 6*x*u^2 + 6*y*u - 3a = 0 links every non-degenerate input to its
  // image (x, y); it is the relation the inverse solves.
  const CurvePtr c = registry_get("toy-1019");
  const PrimePtr& fp = c->field();
  DeterministicRng rng(std::uint64_t{13});
  for (int i = 0; i < 200; ++i) {
    FieldElement u = random_element(fp, rng);
    if (u.is_zero()) continue;
    const CurvePoint pt = icart_forward(*c, u);
    const FieldElement x(pt.x, fp);
    const FieldElement y(pt.y, fp);
    const FieldElement six(6, fp);
    const FieldElement lhs = u * u * u * u - six * x * u * u + six * y * u -
                             FieldElement(3, fp) * c->a();
    CHECK(lhs.is_zero());
  }
}

TEST_CASE("icart inverse round trips and is deterministic") {
  const CurvePtr c = registry_get("toy-1019");
  DeterministicRng rng(std::uint64_t{14});
  for (int i = 0; i < 500; ++i) {
    FieldElement u = random_element(c->field(), rng);
    if (u.is_zero()) continue;
    const CurvePoint pt = icart_forward(*c, u);
    DeterministicRng r1(std::uint64_t{100} + i);
    DeterministicRng r2(std::uint64_t{9000} + i);
    const PreimageSlots s1 = icart_preimages(*c, pt, r1);
    const PreimageSlots s2 = icart_preimages(*c, pt, r2);
    CHECK(slot_contains(s1, u));
    // Root finding is randomized; the slot layout must not be.
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(s1[k].has_value() == s2[k].has_value());
      if (s1[k].has_value()) CHECK(s1[k]->residue() == s2[k]->residue());
    }
    // Ascending compacted layout.
    for (std::size_t k = 1; k < 4; ++k) {
      if (s1[k].has_value()) {
        REQUIRE(s1[k - 1].has_value());
        CHECK(*s1[k - 1] < *s1[k]);
      }
    }
    for (const auto& s : s1) {
      if (s.has_value()) CHECK(icart_forward(*c, *s) == pt);
    }
  }
}

TEST_CASE("icart inverse is complete over the whole toy curve") {
  check_completeness(EncodingKind::kIcart, registry_get("toy-1019"));
}

TEST_CASE("icart inverse of infinity and of unreached points is empty") {
  const CurvePtr c = registry_get("toy-1019");
  DeterministicRng rng(std::uint64_t{15});
  CHECK(slot_count(icart_preimages(*c, CurvePoint::make_infinity(), rng)) ==
        0);
  const auto brute = brute_preimages(EncodingKind::kIcart, *c);
  std::size_t missed = 0;
  for (const CurvePoint& pt : all_points(*c)) {
    if (pt.infinity || brute.count(pt)) continue;
    CHECK(slot_count(icart_preimages(*c, pt, rng)) == 0);
    ++missed;
  }
  // Icart covers roughly 5/8 of the curve; plenty of points are missed.
  CHECK(missed > 100);
}

TEST_CASE("sw degenerate convention: only t = 0 maps to infinity") {
  // 1 + b + t^2 = 0 has no solution on toy-1039 (-7 is a non-residue).
  const CurvePtr c = registry_get("toy-1039");
  CHECK(FieldElement(-7, c->field()).legendre() == -1);
  std::size_t inf_count = 0;
  for (long t = 0; t < 1039; ++t) {
    if (sw_forward(*c, FieldElement(t, c->field())).infinity) ++inf_count;
  }
  CHECK(inf_count == 1);
  CHECK(sw_forward(*c, FieldElement::zero(c->field())).infinity);
}

TEST_CASE("sw forward lands on the curve, 1000 random inputs") {
  const CurvePtr c = registry_get("toy-1039");
  DeterministicRng rng(std::uint64_t{16});
  for (int i = 0; i < 1000; ++i) {
    CHECK(c->on_curve(sw_forward(*c, random_element(c->field(), rng))));
  }
}

TEST_CASE("sw sign convention: f(-t) = -f(t)") {
  const CurvePtr c = registry_get("toy-1039");
  DeterministicRng rng(std::uint64_t{17});
  for (int i = 0; i < 200; ++i) {
    FieldElement t = random_element(c->field(), rng);
    if (t.is_zero()) continue;
    CHECK(sw_forward(*c, -t) == c->neg(sw_forward(*c, t)));
  }
}

TEST_CASE("sw inverse round trips, 500 random inputs") {
  const CurvePtr c = registry_get("toy-1039");
  DeterministicRng rng(std::uint64_t{18});
  for (int i = 0; i < 500; ++i) {
    FieldElement t = random_element(c->field(), rng);
    if (t.is_zero()) continue;
    const CurvePoint pt = sw_forward(*c, t);
    const PreimageSlots slots = sw_preimages(*c, pt);
    CHECK(slot_contains(slots, t));
    for (const auto& s : slots) {
      if (s.has_value()) CHECK(sw_forward(*c, *s) == pt);
    }
  }
}

TEST_CASE("sw preimage sets match exhaustive enumeration") {
  check_completeness(EncodingKind::kSW, registry_get("toy-1039"));
}

TEST_CASE("swu degenerate convention: exactly t in {0, 1, -1}") {
  const CurvePtr c = registry_get("toy-1019");
  const PrimePtr& fp = c->field();
  std::set<mpz_class> degenerate;
  for (long t = 0; t < 1019; ++t) {
    if (swu_forward(*c, FieldElement(t, fp)).infinity) degenerate.insert(t);
  }
  CHECK(degenerate == std::set<mpz_class>{0, 1, 1018});
}

TEST_CASE("swu forward lands on the curve, 1000 random inputs") {
  const CurvePtr c = registry_get("toy-1019");
  DeterministicRng rng(std::uint64_t{19});
  for (int i = 0; i < 1000; ++i) {
    CHECK(c->on_curve(swu_forward(*c, random_element(c->field(), rng))));
  }
}

TEST_CASE("swu branch selection prefers x1 when its rhs is square") {
  const CurvePtr c = registry_get("toy-1019");
  const PrimePtr& fp = c->field();
  DeterministicRng rng(std::uint64_t{20});
  const FieldElement one = FieldElement::one(fp);
  int x1_taken = 0, x2_taken = 0;
  for (int i = 0; i < 200; ++i) {
    FieldElement t = random_element(fp, rng);
    FieldElement h = t * t * t * t - t * t;
    if (h.is_zero()) continue;
    const FieldElement x1 = -c->b() / c->a() * (one + h.inv());
    const FieldElement x2 = -t * t * x1;
    const CurvePoint pt = swu_forward(*c, t);
    if (c->rhs(x1).sqrt().has_value()) {
      CHECK(pt.x == x1.residue());
      ++x1_taken;
    } else {
      CHECK(pt.x == x2.residue());
      ++x2_taken;
    }
  }
  CHECK(x1_taken > 0);
  CHECK(x2_taken > 0);
}

TEST_CASE("swu sign convention: f(-t) = -f(t)") {
  const CurvePtr c = registry_get("toy-1019");
  DeterministicRng rng(std::uint64_t{21});
  for (int i = 0; i < 200; ++i) {
    FieldElement t = random_element(c->field(), rng);
    FieldElement h = t * t * t * t - t * t;
    if (h.is_zero()) continue;
    CHECK(swu_forward(*c, -t) == c->neg(swu_forward(*c, t)));
  }
}

TEST_CASE("swu inverse round trips, 500 random inputs") {
  const CurvePtr c = registry_get("toy-1019");
  DeterministicRng rng(std::uint64_t{22});
  for (int i = 0; i < 500; ++i) {
    FieldElement t = random_element(c->field(), rng);
    FieldElement h = t * t * t * t - t * t;
    if (h.is_zero()) continue;
    const CurvePoint pt = swu_forward(*c, t);
    const PreimageSlots slots = swu_preimages(*c, pt);
    CHECK(slot_contains(slots, t));
    for (const auto& s : slots) {
      if (s.has_value()) CHECK(swu_forward(*c, *s) == pt);
    }
  }
}

TEST_CASE("swu preimage sets match exhaustive enumeration") {
  check_completeness(EncodingKind::kSWU, registry_get("toy-1019"));
}

TEST_CASE("swu and icart work on a curve with a small proper subgroup") {
  // y^2 = x^3 + x + 3 over F_1019 has order 969 = 3*17*19; (318, 721)
  // generates the 19-element subgroup. Encodings target the full curve,
  // not the subgroup, so forwards may land outside <g>.
  const CurvePtr c = CurveParams::create("ex-1019", 1019, 1, 3,
                                         CurvePoint::affine(318, 721), 19);
  DeterministicRng rng(std::uint64_t{23});
  for (int i = 0; i < 200; ++i) {
    FieldElement u = random_element(c->field(), rng);
    const CurvePoint a = icart_forward(*c, u);
    CHECK(c->on_curve(a));
    if (!u.is_zero()) {
      CHECK(slot_contains(icart_preimages(*c, a, rng), u));
    }
    const CurvePoint b = swu_forward(*c, u);
    CHECK(c->on_curve(b));
    FieldElement h = u * u * u * u - u * u;
    if (!h.is_zero()) {
      CHECK(slot_contains(swu_preimages(*c, b), u));
    }
  }
}

TEST_CASE("slot helpers") {
  const PrimePtr fp = Prime::create(11);
  PreimageSlots slots;
  CHECK(slot_count(slots) == 0);
  CHECK_FALSE(slot_contains(slots, FieldElement(3, fp)));
  slots[1] = FieldElement(3, fp);
  slots[3] = FieldElement(7, fp);
  CHECK(slot_count(slots) == 2);
  CHECK(slot_contains(slots, FieldElement(3, fp)));
  CHECK(slot_contains(slots, FieldElement(7, fp)));
  CHECK_FALSE(slot_contains(slots, FieldElement(5, fp)));
}
