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

#include "ecstego/admissible.hpp"

#include <map>
#include <utility>

#include "ecstego/errors.hpp"

namespace ecstego {

TensorEncoding::TensorEncoding(EncodingKind kind, CurvePtr curve, std::size_t s)
    : kind_(kind), curve_(std::move(curve)), s_(s) {
  if (!curve_) throw DomainError("tensor encoding needs a curve");
  if (s_ < 2) throw DomainError("tensor arity must be at least 2");
  if (!encoding_applicable(kind_, *curve_)) {
    throw DomainError(encoding_name(kind_) + " does not apply to curve " +
                      curve_->name());
  }
}

CurvePoint TensorEncoding::forward(const std::vector<FieldElement>& u) const {
  if (u.size() != s_) throw DomainError("tensor input has wrong arity");
  CurvePoint acc = CurvePoint::make_infinity();
  for (const FieldElement& coord : u) {
    acc = curve_->add(acc, encode_to_curve(kind_, *curve_, coord));
  }
  return acc;
}

std::vector<FieldElement> TensorEncoding::sample_preimage(
    const CurvePoint& point, Rng& rng, SampleStats* stats,
    std::size_t max_rounds) const {
  const PrimePtr& fp = curve_->field();
  for (std::size_t round = 1; round <= max_rounds; ++round) {
    // Draw the free coordinates, reduce to a single-coordinate inversion at
    // the residual point, then pick one of the 4 slots uniformly. Accepting
    // only a filled slot makes every preimage tuple of `point` equally
    // likely: a tuple with free part (u_2..u_s) survives the round with
    // probability exactly 1/4 regardless of how many siblings share its
    // residual fiber.
    std::vector<FieldElement> coords;
    coords.reserve(s_);
    coords.push_back(FieldElement::zero(fp));  // placeholder for u_1
    CurvePoint partial = CurvePoint::make_infinity();
    for (std::size_t i = 1; i < s_; ++i) {
      FieldElement u = random_element(fp, rng);
      partial = curve_->add(partial, encode_to_curve(kind_, *curve_, u));
      coords.push_back(u);
    }
    CurvePoint residual = curve_->add(point, curve_->neg(partial));
    PreimageSlots slots = preimages(kind_, *curve_, residual, rng);
    std::size_t pick = static_cast<std::size_t>(rng.below_u64(4));
    if (!slots[pick].has_value()) continue;
    coords[0] = *slots[pick];
    if (stats != nullptr) stats->iterations = round;
    if (forward(coords) != point) {
      throw InternalError("sampled preimage failed forward verification");
    }
    return coords;
  }
  throw InternalError("preimage sampling exceeded retry budget");
}

mpq_class regularity_distance_of_histogram(
    const CurveParams& curve,
    const std::vector<std::pair<CurvePoint, mpz_class>>& histogram,
    const mpz_class& domain_size, std::size_t s) {
  if (s < 1) throw DomainError("tensor arity must be positive");

  // Convolve the single-coordinate histogram with itself s-1 times under
  // the group law. Entries are exact counts, so the final statistical
  // distance is an exact rational.
  std::map<CurvePoint, mpz_class> acc;
  for (const auto& [pt, n] : histogram) acc[pt] += n;
  for (std::size_t step = 2; step <= s; ++step) {
    std::map<CurvePoint, mpz_class> next;
    for (const auto& [pa, na] : acc) {
      for (const auto& [pb, nb] : histogram) {
        next[curve.add(pa, pb)] += na * nb;
      }
    }
    acc = std::move(next);
  }

  // Distance to uniform over the whole group. The registry curves all have
  // cofactor 1, so the group order is q.
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), domain_size.get_mpz_t(),
             static_cast<unsigned long>(s));
  const mpz_class& q = curve.q();
  mpq_class dist(0);
  mpq_class uniform(1);
  uniform /= q;
  for (const auto& [pt, n] : acc) {
    mpq_class mass(n);
    mass /= total;
    mpq_class diff = mass - uniform;
    if (diff < 0) diff = -diff;
    dist += diff;
  }
  mpq_class missing(q - static_cast<long>(acc.size()));
  missing /= q;
  dist += missing;
  dist /= 2;
  dist.canonicalize();
  return dist;
}

mpq_class regularity_distance(const TensorEncoding& encoding) {
  const CurvePtr& curve = encoding.curve();
  const PrimePtr& fp = curve->field();
  const mpz_class& p = fp->value();
  if (p > 4096) throw DomainError("regularity distance needs a toy field");

  // Degenerate inputs map to the neutral element and stay in the histogram:
  // they contribute the identity to the group sum, and dropping them would
  // break the total-count invariant sum N_s = p^s.
  std::map<CurvePoint, mpz_class> hist;
  for (mpz_class u = 0; u < p; ++u) {
    hist[encode_to_curve(encoding.kind(), *curve, FieldElement(u, fp))] += 1;
  }
  std::vector<std::pair<CurvePoint, mpz_class>> histogram(hist.begin(),
                                                          hist.end());
  return regularity_distance_of_histogram(*curve, histogram, p,
                                          encoding.arity());
}

}  // namespace ecstego
