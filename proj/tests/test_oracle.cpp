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

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "doctest.h"

#include "ecstego/admissible.hpp"
#include "ecstego/curve.hpp"
#include "ecstego/encoding.hpp"
#include "ecstego/errors.hpp"
#include "ecstego/oracle.hpp"
#include "ecstego/rng.hpp"

using namespace ecstego;

namespace {

const ToyGroup& group_1019() {
  static const ToyGroup g = ToyGroup::build(registry_get("toy-1019"));
  return g;
}

const ToyGroup& group_1039() {
  static const ToyGroup g = ToyGroup::build(registry_get("toy-1039"));
  return g;
}

const PreimageTable& icart_table() {
  static const PreimageTable t(group_1019(), EncodingKind::kIcart);
  return t;
}

const PreimageTable& swu_table() {
  static const PreimageTable t(group_1019(), EncodingKind::kSWU);
  return t;
}

const PreimageTable& sw_table() {
  static const PreimageTable t(group_1039(), EncodingKind::kSW);
  return t;
}

std::size_t bucket_total(const PreimageTable& table) {
  std::size_t total = 0;
  for (const auto& bucket : table.buckets()) total += bucket.size();
  return total;
}

}  // namespace

TEST_CASE("toy group walk indexes every multiple of the generator") {
  const ToyGroup& group = group_1019();
  const CurvePtr& curve = group.curve();
  REQUIRE(group.order() == 1033);
  CHECK(group.point(0).infinity);
  CHECK(group.point(1) == curve->g());
  CHECK(group.index(CurvePoint::make_infinity()) == 0);

  DeterministicRng rng(std::uint64_t{91});
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t i = rng.below_u64(group.order());
    const CurvePoint p = group.point(i);
    CHECK(group.index(p) == i);
    CHECK(p == curve->scalar_mul(mpz_class(static_cast<unsigned long>(i)),
                                 curve->g()));
  }

  // (3, 7) misses the curve, so it cannot have an index.
  CHECK_THROWS_AS(group.index(CurvePoint::affine(3, 7)), DomainError);
  CHECK_THROWS_AS(ToyGroup::build(registry_get("p256")), DomainError);
}

TEST_CASE("preimage tables are total, sorted and bounded by degree") {
  struct Case {
    const PreimageTable* table;
    const ToyGroup* group;
    std::vector<unsigned long> degenerate;
  };
  const Case cases[] = {
      {&icart_table(), &group_1019(), {0}},
      {&swu_table(), &group_1019(), {0, 1, 1018}},
      {&sw_table(), &group_1039(), {0}},
  };
  for (const Case& c : cases) {
    const unsigned long p = mpz_get_ui(c.group->curve()->p().get_mpz_t());
    CHECK(bucket_total(*c.table) == p);
    CHECK(c.table->max_finite_preimages() <= 4);
    REQUIRE(c.table->infinity_bucket().size() == c.degenerate.size());
    for (std::size_t i = 0; i < c.degenerate.size(); ++i) {
      CHECK(c.table->infinity_bucket()[i] == c.degenerate[i]);
    }
    for (const auto& bucket : c.table->buckets()) {
      CHECK(std::is_sorted(bucket.begin(), bucket.end()));
    }
  }

  // Exhaustive forward confirmation for one table: u lands in bucket i
  // exactly when the encoding maps u to i*g.
  const ToyGroup& group = group_1019();
  const CurvePtr& curve = group.curve();
  for (std::size_t i = 0; i < group.order(); ++i) {
    for (const mpz_class& u : icart_table().buckets()[i]) {
      const CurvePoint image =
          encode_to_curve(EncodingKind::kIcart, *curve, FieldElement(u, curve->field()));
      CHECK(image == group.point(i));
    }
  }
}

TEST_CASE("pair histogram is the exact convolution of bucket sizes") {
  const ToyGroup& group = group_1019();
  const std::size_t q = group.order();
  const PreimageTable& table = swu_table();
  const mpz_class p = group.curve()->p();

  const std::vector<mpz_class> single = ns_histogram(group, table, 1);
  REQUIRE(single.size() == q);
  for (std::size_t i = 0; i < q; ++i) {
    CHECK(single[i] == table.buckets()[i].size());
  }

  const std::vector<mpz_class> pairs = ns_histogram(group, table, 2);
  mpz_class total = 0;
  for (const mpz_class& h : pairs) {
    CHECK(h > 0);
    total += h;
  }
  CHECK(total == p * p);

  DeterministicRng rng(std::uint64_t{94});
  for (int trial = 0; trial < 5; ++trial) {
    const std::size_t i = rng.below_u64(q);
    mpz_class expected = 0;
    for (std::size_t j = 0; j < q; ++j) {
      expected += single[j] * single[(i + q - j) % q];
    }
    CHECK(pairs[i] == expected);
  }

  const std::vector<mpz_class> triples = ns_histogram(group, icart_table(), 3);
  mpz_class total3 = 0;
  for (const mpz_class& h : triples) total3 += h;
  CHECK(total3 == p * p * p);

  CHECK_THROWS_AS(ns_histogram(group, table, 0), DomainError);
}

TEST_CASE("histogram distance agrees with the tensor encoding module") {
  struct Case {
    const ToyGroup* group;
    const PreimageTable* table;
    EncodingKind kind;
  };
  const Case cases[] = {
      {&group_1019(), &icart_table(), EncodingKind::kIcart},
      {&group_1019(), &swu_table(), EncodingKind::kSWU},
      {&group_1039(), &sw_table(), EncodingKind::kSW},
  };
  for (const Case& c : cases) {
    const mpq_class via_oracle =
        histogram_distance(ns_histogram(*c.group, *c.table, 2));
    const TensorEncoding tensor(c.kind, c.group->curve(), 2);
    CHECK(via_oracle == regularity_distance(tensor));
    CHECK(via_oracle < mpq_class(5, 100));
  }
  CHECK(histogram_distance(ns_histogram(group_1019(), icart_table(), 2))
            .get_str() == "19378876/1072626913");
}

TEST_CASE("histogram distance closed forms") {
  const std::size_t q = 1033;
  std::vector<mpz_class> uniform(q, mpz_class(3));
  CHECK(histogram_distance(uniform) == 0);

  std::vector<mpz_class> delta(q, mpz_class(0));
  delta[5] = 7;
  CHECK(histogram_distance(delta) == mpq_class(q - 1, q));

  CHECK_THROWS_AS(histogram_distance({}), DomainError);
  CHECK_THROWS_AS(histogram_distance(std::vector<mpz_class>(4, mpz_class(0))),
                  DomainError);
}

TEST_CASE("sampler support matches point-arithmetic enumeration") {
  const ToyGroup& group = group_1019();
  const CurvePtr& curve = group.curve();
  const PreimageTable& table = swu_table();

  std::map<CurvePoint, std::vector<mpz_class>> forward;
  for (mpz_class u = 0; u < curve->p(); ++u) {
    const CurvePoint image =
        encode_to_curve(EncodingKind::kSWU, *curve, FieldElement(u, curve->field()));
    forward[image].push_back(u);
  }

  for (std::size_t target_idx : {std::size_t{0}, std::size_t{123}, std::size_t{777}}) {
    const CurvePoint target = group.point(target_idx);
    std::vector<std::pair<mpz_class, mpz_class>> expected;
    for (mpz_class u = 0; u < curve->p(); ++u) {
      const CurvePoint first =
          encode_to_curve(EncodingKind::kSWU, *curve, FieldElement(u, curve->field()));
      if (first.infinity) continue;
      const CurvePoint residual = curve->add(target, curve->neg(first));
      const auto it = forward.find(residual);
      if (it == forward.end()) continue;
      for (const mpz_class& v : it->second) expected.emplace_back(u, v);
    }
    std::sort(expected.begin(), expected.end());
    const auto support = sampler_support(group, table, target);
    CHECK(support == expected);
  }

  CHECK(sampler_support(group, table, group.point(123)).size() == 916);
}

TEST_CASE("the library sampler is uniform on the exact support") {
  DeterministicRng rng(std::uint64_t{122});
  const auto p = sampler_chisquare(group_1019(), swu_table(),
                                   EncodingKind::kSWU, group_1019().point(123),
                                   20000, SamplerVariant::kUniform, rng);
  REQUIRE(p.has_value());
  CHECK(*p > 0.001);
}

TEST_CASE("a first-slot shortcut is flagged immediately") {
  DeterministicRng rng(std::uint64_t{128});
  const auto p = sampler_chisquare(group_1019(), swu_table(),
                                   EncodingKind::kSWU, group_1019().point(123),
                                   20000, SamplerVariant::kBiasedFirstSlot, rng);
  REQUIRE(p.has_value());
  CHECK(*p < 1e-6);
}

TEST_CASE("chi-square preconditions") {
  DeterministicRng rng(std::uint64_t{95});
  // 100 draws over ~900 support pairs leaves expected counts below 5.
  const auto p = sampler_chisquare(group_1019(), swu_table(),
                                   EncodingKind::kSWU, group_1019().point(123),
                                   100, SamplerVariant::kUniform, rng);
  CHECK_FALSE(p.has_value());
}
