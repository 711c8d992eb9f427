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

#include "ecstego/oracle.hpp"

#include <algorithm>
#include <utility>

#include "ecstego/errors.hpp"
#include "ecstego/special.hpp"

namespace ecstego {

namespace {

// Exhaustive enumeration walks all of F_p and stores every group element,
// so refuse fields beyond brute-force scale.
constexpr unsigned long kMaxToyPrime = 1ul << 11;

}  // namespace

ToyGroup ToyGroup::build(const CurvePtr& curve) {
  if (curve->p() > kMaxToyPrime) {
    throw DomainError("toy oracle requires p <= 2^11");
  }
  ToyGroup group;
  group.curve_ = curve;
  const std::size_t order = mpz_get_ui(curve->q().get_mpz_t());
  group.points_.reserve(order);
  CurvePoint current = CurvePoint::make_infinity();
  for (std::size_t i = 0; i < order; ++i) {
    group.points_.push_back(current);
    group.index_.emplace(current, i);
    current = curve->add(current, curve->g());
  }
  if (!current.infinity) {
    throw InternalError("generator order does not match the group order");
  }
  return group;
}

std::size_t ToyGroup::index(const CurvePoint& point) const {
  const auto it = index_.find(point);
  if (it == index_.end()) throw DomainError("point is not in the group");
  return it->second;
}

PreimageTable::PreimageTable(const ToyGroup& group, EncodingKind kind) {
  buckets_.resize(group.order());
  const CurvePtr& curve = group.curve();
  for (mpz_class u = 0; u < curve->p(); ++u) {
    const FieldElement input(u, curve->field());
    const CurvePoint image = encode_to_curve(kind, *curve, input);
    buckets_[group.index(image)].push_back(u);
  }
}

std::size_t PreimageTable::max_finite_preimages() const {
  std::size_t max = 0;
  for (std::size_t i = 1; i < buckets_.size(); ++i) {
    max = std::max(max, buckets_[i].size());
  }
  return max;
}

std::vector<mpz_class> ns_histogram(const ToyGroup& group,
                                    const PreimageTable& table,
                                    std::size_t s) {
  if (s == 0) throw DomainError("histogram arity must be positive");
  const std::size_t q = group.order();
  std::vector<mpz_class> base(q);
  for (std::size_t i = 0; i < q; ++i) base[i] = table.buckets()[i].size();
  std::vector<mpz_class> result = base;
  for (std::size_t step = 1; step < s; ++step) {
    std::vector<mpz_class> next(q, mpz_class(0));
    for (std::size_t i = 0; i < q; ++i) {
      if (result[i] == 0) continue;
      for (std::size_t j = 0; j < q; ++j) {
        next[(i + j) % q] += result[i] * base[j];
      }
    }
    result = std::move(next);
  }
  return result;
}

mpq_class histogram_distance(const std::vector<mpz_class>& histogram) {
  if (histogram.empty()) throw DomainError("histogram is empty");
  mpz_class total = 0;
  for (const mpz_class& h : histogram) total += h;
  if (total == 0) throw DomainError("histogram has no mass");
  const mpz_class q(histogram.size());
  // sum |h_i/total - 1/q| = sum |h_i*q - total| / (total*q), halved.
  mpz_class numerator = 0;
  for (const mpz_class& h : histogram) {
    numerator += abs(h * q - total);
  }
  mpq_class distance(numerator, 2 * total * q);
  distance.canonicalize();
  return distance;
}

std::vector<std::pair<mpz_class, mpz_class>> sampler_support(
    const ToyGroup& group, const PreimageTable& table,
    const CurvePoint& target) {
  // Pure index arithmetic: v sits in bucket j iff f(v) = j*g, so the
  // residual target - f(v) has index (target_idx - j) mod q. Index 0 is
  // the point at infinity, which only degenerate u could hit.
  const std::size_t q = group.order();
  const std::size_t target_idx = group.index(target);
  std::vector<std::pair<mpz_class, mpz_class>> support;
  for (std::size_t j = 0; j < q; ++j) {
    const std::size_t residual_idx = (target_idx + q - j) % q;
    if (residual_idx == 0) continue;
    for (const mpz_class& v : table.buckets()[j]) {
      for (const mpz_class& u : table.buckets()[residual_idx]) {
        support.emplace_back(u, v);
      }
    }
  }
  std::sort(support.begin(), support.end());
  return support;
}

std::optional<double> sampler_chisquare(const ToyGroup& group,
                                        const PreimageTable& table,
                                        EncodingKind kind,
                                        const CurvePoint& target,
                                        std::size_t draws,
                                        SamplerVariant variant, Rng& rng) {
  const auto support = sampler_support(group, table, target);
  if (support.size() < 2) return std::nullopt;
  const double expected =
      static_cast<double>(draws) / static_cast<double>(support.size());
  if (expected < 5.0) return std::nullopt;

  std::map<std::pair<mpz_class, mpz_class>, std::size_t> bin_of;
  for (std::size_t i = 0; i < support.size(); ++i) bin_of.emplace(support[i], i);
  std::vector<std::size_t> observed(support.size(), 0);

  const CurvePtr& curve = group.curve();
  const TensorEncoding tensor(kind, curve, 2);
  for (std::size_t d = 0; d < draws; ++d) {
    std::pair<mpz_class, mpz_class> pair;
    if (variant == SamplerVariant::kUniform) {
      const auto coords = tensor.sample_preimage(target, rng);
      pair = {coords[0].residue(), coords[1].residue()};
    } else {
      // Deliberately broken control: always take the first occupied slot
      // instead of the uniform slot pick with retry. Preimages sitting in
      // later slots become unreachable, so fibers with two or more
      // preimages are sampled lopsidedly.
      for (;;) {
        const FieldElement v = random_element(curve->field(), rng);
        const CurvePoint residual =
            curve->add(target, curve->neg(encode_to_curve(kind, *curve, v)));
        const PreimageSlots slots = preimages(kind, *curve, residual, rng);
        const auto it = std::find_if(slots.begin(), slots.end(),
                                     [](const auto& s) { return s.has_value(); });
        if (it == slots.end()) continue;
        pair = {(*it)->residue(), v.residue()};
        break;
      }
    }
    const auto it = bin_of.find(pair);
    if (it == bin_of.end()) {
      throw InternalError("sampler emitted a pair outside the exact support");
    }
    ++observed[it->second];
  }

  double chisq = 0.0;
  for (std::size_t count : observed) {
    const double diff = static_cast<double>(count) - expected;
    chisq += diff * diff / expected;
  }
  return chisq_pvalue(chisq, static_cast<double>(support.size() - 1));
}

}  // namespace ecstego
