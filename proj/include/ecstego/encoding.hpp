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

#ifndef ECSTEGO_ENCODING_HPP_
#define ECSTEGO_ENCODING_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "ecstego/curve.hpp"
#include "ecstego/field.hpp"

namespace ecstego {

// Deterministic maps f : F_p -> E(F_p) with at most 4 preimages per point
// and a complete, efficiently computable inverse image.
enum class EncodingKind {
  kIcart,  // requires p = 2 (mod 3)
  kSW,     // Shallue-van de Woestijne for j = 0 curves (a = 0, b != 0),
           // requires p = 1 (mod 3) so that -3 is a square
  kSWU,    // simplified Shallue-van de Woestijne-Ulas, requires
           // p = 3 (mod 4) and a, b != 0
};

std::string encoding_name(EncodingKind kind);
// Accepts "icart", "sw", "swu" (lowercase). Throws DomainError otherwise.
EncodingKind encoding_from_name(const std::string& name);

// True when the curve satisfies the congruence and coefficient conditions
// listed above for the encoding.
bool encoding_applicable(EncodingKind kind, const CurveParams& curve);

// Complete preimage set of one point, padded to 4 slots with std::nullopt.
// Slot layout is canonical per encoding (see the .cpp for the exact rule),
// so equal points always produce identical slot vectors.
using PreimageSlots = std::array<std::optional<FieldElement>, 4>;

std::size_t slot_count(const PreimageSlots& slots);
bool slot_contains(const PreimageSlots& slots, const FieldElement& u);

// Forward maps. Inputs outside the encoding's domain exceptions (for example
// u = 0 for Icart) are handled per the encoding's own convention and always
// return a point on the curve.
CurvePoint icart_forward(const CurveParams& curve, const FieldElement& u);
CurvePoint sw_forward(const CurveParams& curve, const FieldElement& t);
CurvePoint swu_forward(const CurveParams& curve, const FieldElement& t);

// Complete inverse images: every returned u satisfies forward(u) == point,
// and every u with forward(u) == point is returned. The inverse image of
// the point at infinity is empty for all three encodings.
PreimageSlots icart_preimages(const CurveParams& curve, const CurvePoint& point,
                              Rng& rng);
PreimageSlots sw_preimages(const CurveParams& curve, const CurvePoint& point);
PreimageSlots swu_preimages(const CurveParams& curve, const CurvePoint& point);

// Dispatch by kind. Throws DomainError if the encoding does not apply to
// the curve.
CurvePoint encode_to_curve(EncodingKind kind, const CurveParams& curve,
                           const FieldElement& u);
PreimageSlots preimages(EncodingKind kind, const CurveParams& curve,
                        const CurvePoint& point, Rng& rng);

}  // namespace ecstego

#endif  // ECSTEGO_ENCODING_HPP_
