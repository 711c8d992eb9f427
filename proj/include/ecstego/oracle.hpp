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

#ifndef ECSTEGO_ORACLE_HPP_
#define ECSTEGO_ORACLE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "ecstego/admissible.hpp"
#include "ecstego/curve.hpp"
#include "ecstego/encoding.hpp"
#include "ecstego/rng.hpp"

namespace ecstego {

// Brute-force view of a toy curve's cyclic group: points[i] = i*g, with a
// reverse index. Everything downstream works on indices, where the group
// law is addition mod q. Only feasible when q fits comfortably in memory.
class ToyGroup {
 public:
  static ToyGroup build(const CurvePtr& curve);

  const CurvePtr& curve() const { return curve_; }
  std::size_t order() const { return points_.size(); }
  const CurvePoint& point(std::size_t index) const { return points_[index]; }
  std::size_t index(const CurvePoint& point) const;  // discrete log of point

 private:
  CurvePtr curve_;
  std::vector<CurvePoint> points_;
  std::map<CurvePoint, std::size_t> index_;
};

// Exhaustive forward-map table: bucket[i] = sorted list of all u with
// f(u) = i*g. Index 0 is the neutral element, so bucket[0] collects the
// degenerate inputs the encodings map to infinity by convention.
class PreimageTable {
 public:
  PreimageTable(const ToyGroup& group, EncodingKind kind);

  const std::vector<std::vector<mpz_class>>& buckets() const {
    return buckets_;
  }
  const std::vector<mpz_class>& infinity_bucket() const { return buckets_[0]; }
  std::size_t max_finite_preimages() const;  // max bucket size, index > 0

 private:
  std::vector<std::vector<mpz_class>> buckets_;
};

// Preimage-count histogram of the s-fold sum map F(u_1..u_s) under
// exhaustive enumeration, computed by s-fold convolution of the bucket
// sizes over the index group (cyclic of prime order, so index addition
// mod q is the group law). Entry i = #preimages of i*g; the entries sum
// to p^s.
std::vector<mpz_class> ns_histogram(const ToyGroup& group,
                                    const PreimageTable& table, std::size_t s);

// Exact statistical distance between the histogram (normalized by its own
// total) and the uniform distribution over its index range.
mpq_class histogram_distance(const std::vector<mpz_class>& histogram);

// All preimage pairs of one target the sampler can emit: (u, v) with
// f(u) + f(v) = target and f(u) finite. Pairs whose first coordinate is
// degenerate are preimages too, but the inverse map never returns
// degenerate inputs, so they are excluded from the reference support.
std::vector<std::pair<mpz_class, mpz_class>> sampler_support(
    const ToyGroup& group, const PreimageTable& table, const CurvePoint& target);

enum class SamplerVariant {
  kUniform,        // the library's rejection sampler
  kBiasedFirstSlot,  // deliberately broken: always takes the first slot
};

// Draw `draws` preimages of `target` from the arity-2 sampler and test the
// empirical distribution over the exact support with a chi-square.
// Returns the p-value, or nullopt when the support is smaller than 2 bins
// or expected counts fall below 5 (chi-square precondition).
std::optional<double> sampler_chisquare(const ToyGroup& group,
                                        const PreimageTable& table,
                                        EncodingKind kind,
                                        const CurvePoint& target,
                                        std::size_t draws, SamplerVariant variant,
                                        Rng& rng);

}  // namespace ecstego

#endif  // ECSTEGO_ORACLE_HPP_
