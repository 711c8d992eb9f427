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

#ifndef ECSTEGO_ADMISSIBLE_HPP_
#define ECSTEGO_ADMISSIBLE_HPP_

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "ecstego/curve.hpp"
#include "ecstego/encoding.hpp"
#include "ecstego/field.hpp"
#include "ecstego/rng.hpp"

namespace ecstego {

struct SampleStats {
  std::size_t iterations = 0;  // Point Hiding loop rounds consumed
};

// F(u_1, ..., u_s) = f(u_1) + ... + f(u_s) with s >= 2 summands, the
// construction that turns a well-distributed encoding f into an admissible
// one. The
// last s-1 coordinates enter through the group sum f(u_2) + ... + f(u_s),
// so sampling a preimage of P reduces to inverting f at P - (partial sum).
class TensorEncoding {
 public:
  // Throws DomainError if s < 2 or the encoding does not apply to the curve.
  TensorEncoding(EncodingKind kind, CurvePtr curve, std::size_t s);

  EncodingKind kind() const { return kind_; }
  const CurvePtr& curve() const { return curve_; }
  std::size_t arity() const { return s_; }

  // f(u_1) + f(u_2) + ... + f(u_s); input size must equal arity().
  CurvePoint forward(const std::vector<FieldElement>& u) const;

  // Uniform preimage of `point` under forward(), by rejection:
  // draw u_2..u_s uniformly, invert f at the residual point, pick one of
  // the 4 slots uniformly, retry on an empty slot. Each accepted output
  // lands with probability (#preimages of the residual)/4 per round, which
  // makes the conditional output distribution exactly the uniform one over
  // the fiber. Throws InternalError after `max_rounds` rejections.
  std::vector<FieldElement> sample_preimage(const CurvePoint& point, Rng& rng,
                                            SampleStats* stats = nullptr,
                                            std::size_t max_rounds = 1000) const;

 private:
  EncodingKind kind_;
  CurvePtr curve_;
  std::size_t s_;
};

// Exact statistical distance between forward() images of uniform input and
// the uniform distribution on E(F_p), as a rational number. Enumerates all
// p^s inputs via repeated group-convolution of the single-coordinate image
// histogram, so it is only feasible for toy fields.
mpq_class regularity_distance(const TensorEncoding& encoding);

// Same statistic for an arbitrary single-coordinate histogram over the
// curve group (point -> count over a domain of `domain_size` inputs),
// convolved s times. Lets tests feed a deliberately skewed encoding.
mpq_class regularity_distance_of_histogram(
    const CurveParams& curve,
    const std::vector<std::pair<CurvePoint, mpz_class>>& histogram,
    const mpz_class& domain_size, std::size_t s);

}  // namespace ecstego

#endif  // ECSTEGO_ADMISSIBLE_HPP_
