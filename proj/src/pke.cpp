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

#include "ecstego/pke.hpp"

#include <algorithm>
#include <utility>

#include "ecstego/errors.hpp"

namespace ecstego {

BiasParams default_bias_params(const CurveParams& curve,
                               PaddingPolicy policy) {
  BiasParams bp;
  bp.k = curve.field()->bits();
  switch (policy) {
    case PaddingPolicy::kEighth:
      bp.t = std::max<std::size_t>(8, (bp.k + 7) / 8);
      break;
    case PaddingPolicy::kQuarter:
      bp.t = std::max<std::size_t>(8, (bp.k + 3) / 4);
      break;
  }
  return bp;
}

KeyPair keygen(const CurvePtr& curve, EncodingKind kind, std::size_t s,
               Rng& rng) {
  if (!curve) throw DomainError("keygen needs a curve");
  if (s < 2) throw DomainError("tensor arity must be at least 2");
  if (!encoding_applicable(kind, *curve)) {
    throw DomainError(encoding_name(kind) + " does not apply to curve " +
                      curve->name());
  }
  // sk = 0 would give pk = infinity and a key exchange with no secret;
  // resampling costs 1/q and keeps every derived operation total.
  mpz_class sk = rng.below(curve->q());
  while (sk == 0) sk = rng.below(curve->q());

  KeyPair keys;
  keys.sk = sk;
  keys.pub.curve = curve;
  keys.pub.kind = kind;
  keys.pub.s = s;
  keys.pub.point = curve->scalar_mul(sk, curve->g());
  return keys;
}

mpz_class bias_expand(const FieldElement& u, const BiasParams& bias, Rng& rng) {
  const mpz_class& p = u.modulus()->value();
  mpz_class limit = 1;
  mpz_mul_2exp(limit.get_mpz_t(), limit.get_mpz_t(), bias.total_bits());
  // r ranges over {0..floor((2^(k+t) - 1 - u)/p)}, the largest set keeping
  // u + r*p strictly below 2^(k+t).
  mpz_class r_max = (limit - 1 - u.residue()) / p;
  mpz_class r = rng.below(r_max + 1);
  return u.residue() + r * p;
}

FieldElement bias_reduce(const mpz_class& value, const PrimePtr& field) {
  return FieldElement(value, field);
}

Sha256::Digest kdf(const CurveParams& curve, const CurvePoint& point) {
  if (point.infinity) throw DomainError("kdf input is the neutral element");
  return Sha256::digest(curve.serialize_point(point));
}

Bytes keystream_xor(const Sha256::Digest& key, const Bytes& data) {
  Bytes out(data.size());
  Sha256::Digest block{};
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (i % 32 == 0) {
      std::uint64_t counter = i / 32;
      Sha256 h;
      h.update(key.data(), key.size());
      std::uint8_t ctr[8];
      for (int j = 0; j < 8; ++j) {
        ctr[j] = static_cast<std::uint8_t>(counter >> (56 - 8 * j));
      }
      h.update(ctr, 8);
      block = h.finish();
    }
    out[i] = data[i] ^ block[i % 32];
  }
  return out;
}

Ciphertext encrypt(const PublicKey& pk, const Bytes& message, Rng& rng,
                   PaddingPolicy policy) {
  if (!pk.curve) throw DomainError("public key has no curve");
  if (pk.point.infinity || !pk.curve->on_curve(pk.point)) {
    throw DomainError("public key point invalid");
  }
  if (message.size() >= (std::uint64_t{1} << 32)) {
    throw DomainError("message too long for 32-bit framing");
  }
  const CurveParams& curve = *pk.curve;
  TensorEncoding tensor(pk.kind, pk.curve, pk.s);
  BiasParams bias = default_bias_params(curve, policy);

  // Ephemeral key agreement: K is derived from a*pk = a*sk*g, which the
  // holder of sk recovers as sk*(a*g).
  mpz_class a = rng.below(curve.q());
  while (a == 0) a = rng.below(curve.q());
  Sha256::Digest key = kdf(curve, curve.scalar_mul(a, pk.point));
  CurvePoint ephemeral = curve.scalar_mul(a, curve.g());

  Ciphertext ct;
  ct.bias = bias;
  ct.s = pk.s;
  for (const FieldElement& coord : tensor.sample_preimage(ephemeral, rng)) {
    ct.c1.append_uint(bias_expand(coord, bias, rng), bias.total_bits());
  }

  Bytes framed;
  framed.reserve(4 + message.size());
  for (int i = 0; i < 4; ++i) {
    framed.push_back(static_cast<std::uint8_t>(message.size() >> (24 - 8 * i)));
  }
  framed.insert(framed.end(), message.begin(), message.end());
  ct.c2 = keystream_xor(key, framed);
  return ct;
}

Bytes decrypt(const KeyPair& keys, const Ciphertext& ct, PaddingPolicy policy) {
  const CurveParams& curve = *keys.pub.curve;
  TensorEncoding tensor(keys.pub.kind, keys.pub.curve, keys.pub.s);
  BiasParams bias = default_bias_params(curve, policy);
  if (ct.c1.size() != ct.s * bias.total_bits() || ct.s != keys.pub.s) {
    throw FormatError("ciphertext c1 has wrong bit length");
  }

  std::vector<FieldElement> coords;
  coords.reserve(ct.s);
  for (std::size_t i = 0; i < ct.s; ++i) {
    mpz_class v = ct.c1.read_uint(i * bias.total_bits(), bias.total_bits());
    coords.push_back(bias_reduce(v, curve.field()));
  }
  CurvePoint point = tensor.forward(coords);
  if (point.infinity) {
    throw FormatError("ciphertext decodes to the neutral element");
  }
  Sha256::Digest key = kdf(curve, curve.scalar_mul(keys.sk, point));

  Bytes framed = keystream_xor(key, ct.c2);
  if (framed.size() < 4) throw FormatError("ciphertext c2 shorter than frame");
  std::uint64_t len = 0;
  for (int i = 0; i < 4; ++i) len = (len << 8) | framed[static_cast<std::size_t>(i)];
  if (4 + len != framed.size()) {
    throw FormatError("ciphertext framing length mismatch");
  }
  return Bytes(framed.begin() + 4, framed.end());
}

Bytes ciphertext_to_bytes(const Ciphertext& ct) {
  Bytes out = ct.c1.to_bytes();
  out.insert(out.end(), ct.c2.begin(), ct.c2.end());
  return out;
}

Ciphertext ciphertext_from_bytes(const Bytes& wire, const CurveParams& curve,
                                 std::size_t s, const BiasParams& bias) {
  (void)curve;
  std::size_t c1_bits = s * bias.total_bits();
  std::size_t c1_bytes = (c1_bits + 7) / 8;
  if (wire.size() < c1_bytes + 4) {
    throw FormatError("ciphertext shorter than fixed layout");
  }
  Ciphertext ct;
  ct.bias = bias;
  ct.s = s;
  Bytes head(wire.begin(), wire.begin() + static_cast<long>(c1_bytes));
  // Pad bits beyond c1's exact bit length are transport filler; only the
  // leading c1_bits carry coordinates.
  ct.c1 = BitString::from_bytes(head).slice(0, c1_bits);
  ct.c2 = Bytes(wire.begin() + static_cast<long>(c1_bytes), wire.end());
  return ct;
}

}  // namespace ecstego
