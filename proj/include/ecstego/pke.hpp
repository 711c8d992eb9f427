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

#ifndef ECSTEGO_PKE_HPP_
#define ECSTEGO_PKE_HPP_

#include <cstddef>
#include <cstdint>

#include <gmpxx.h>

#include "ecstego/admissible.hpp"
#include "ecstego/bits.hpp"
#include "ecstego/bytes.hpp"
#include "ecstego/curve.hpp"
#include "ecstego/encoding.hpp"
#include "ecstego/rng.hpp"
#include "ecstego/sha256.hpp"

namespace ecstego {

// Rerandomization parameters: field elements are hidden as (k+t)-bit
// integers u + r*p, which are within p/2^(k+t) <= 2^-t of uniform.
struct BiasParams {
  std::size_t k = 0;  // bit length of p
  std::size_t t = 0;  // extra padding bits

  std::size_t total_bits() const { return k + t; }
};

enum class PaddingPolicy {
  kEighth,   // t = max(8, ceil(k/8))
  kQuarter,  // t = max(8, ceil(k/4))
};

BiasParams default_bias_params(const CurveParams& curve,
                               PaddingPolicy policy = PaddingPolicy::kEighth);

// Ciphertexts are pairs (c1, c2): c1 carries the s rerandomized field
// elements hiding an ephemeral curve point, c2 is the keystream-encrypted
// payload (a 4-byte big-endian length followed by the message bytes, all
// encrypted). Everything a decoder needs beyond the secret key is the
// (curve, encoding, s, t) tuple agreed out of band.
struct Ciphertext {
  BitString c1;       // s * (k+t) bits, the hidden ephemeral point
  Bytes c2;           // 4 + |m| keystream-encrypted bytes
  BiasParams bias;    // parameters used for c1
  std::size_t s = 0;  // tensor arity
};

struct PublicKey {
  CurvePtr curve;
  EncodingKind kind = EncodingKind::kIcart;
  std::size_t s = 2;
  CurvePoint point;  // sk * g
};

struct KeyPair {
  PublicKey pub;
  mpz_class sk;  // uniform in [1, q)
};

KeyPair keygen(const CurvePtr& curve, EncodingKind kind, std::size_t s,
               Rng& rng);

// u + r*p for uniform r in [0, floor((2^(k+t) - 1 - u)/p)]: the largest
// range that keeps every output below 2^(k+t).
mpz_class bias_expand(const FieldElement& u, const BiasParams& bias, Rng& rng);
FieldElement bias_reduce(const mpz_class& value, const PrimePtr& field);

// SHA-256 over the serialized point. Throws DomainError on infinity, which
// never appears for honest keys (0 < sk < q and 0 < a < q).
Sha256::Digest kdf(const CurveParams& curve, const CurvePoint& point);
// SHA-256 counter-mode stream: block j = SHA-256(key || j) with j as a
// big-endian 64-bit counter. XOR is its own inverse.
Bytes keystream_xor(const Sha256::Digest& key, const Bytes& data);

// Hybrid encryption: ephemeral a, shared point a*pk, c1 hides a*g behind
// the tensor encoding's sampled preimage plus rerandomization, c2 is the
// framed message under the keystream. Output bits are indistinguishable
// from uniform as long as the curve's DDH problem is hard.
Ciphertext encrypt(const PublicKey& pk, const Bytes& message, Rng& rng,
                   PaddingPolicy policy = PaddingPolicy::kEighth);
Bytes decrypt(const KeyPair& keys, const Ciphertext& ct,
              PaddingPolicy policy = PaddingPolicy::kEighth);

// Wire form: the c1 bits packed MSB-first (zero tail padding to a whole
// byte) followed by the c2 bytes. Parsing needs (curve, encoding kind,
// s, policy) and throws FormatError on truncation or a bad length frame.
Bytes ciphertext_to_bytes(const Ciphertext& ct);
Ciphertext ciphertext_from_bytes(const Bytes& wire, const CurveParams& curve,
                                 std::size_t s, const BiasParams& bias);

}  // namespace ecstego

#endif  // ECSTEGO_PKE_HPP_
