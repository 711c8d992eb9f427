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

#ifndef ECSTEGO_STEGO_HPP_
#define ECSTEGO_STEGO_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ecstego/bits.hpp"
#include "ecstego/pke.hpp"
#include "ecstego/rng.hpp"

namespace ecstego {

// Finite distribution over cover tokens, loaded from "token<TAB>weight"
// lines ('#' starts a comment). Requires at least 2 distinct tokens and
// strictly positive weights; weights are normalized on load.
class ChannelModel {
 public:
  static ChannelModel load(const std::string& text);
  static ChannelModel load_file(const std::string& path);

  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::vector<double>& probabilities() const { return probs_; }

  // Inverse-CDF sampling on one uniform draw from rng.
  const std::string& sample(Rng& rng) const;
  // Index of an exact token, or throws FormatError if unknown.
  std::size_t index_of(const std::string& token) const;

  // True when the size is a power of two and every weight is equal, the
  // precondition for the direct b-bits-per-token codec.
  bool uniform_power_of_two() const;
  std::size_t bits_per_token() const;  // log2(size) when the above holds

  // Per-token LSB of SHA-256(token), the bit a rejection embedder forces.
  bool token_bit(std::size_t index) const;
  // Probability mass of tokens with bit 0 and bit 1; both must be positive
  // for the rejection codec to terminate.
  std::pair<double, double> bit_mass() const;

 private:
  std::vector<std::string> tokens_;
  std::vector<double> probs_;
  std::vector<double> cumulative_;
  std::vector<bool> bits_;
};

// A sequence of channel tokens, one per line in file form.
struct Stegotext {
  std::vector<std::string> tokens;

  std::string to_text() const;                       // newline-terminated
  static Stegotext from_text(const std::string& text);
};

// Maps uniform-looking bit strings to token sequences and back. `history`
// is opaque context a stateful channel could condition on; both built-in
// codecs ignore it but the interface carries it through.
class Codec {
 public:
  virtual ~Codec() = default;
  virtual Stegotext encode(const BitString& bits, const ChannelModel& channel,
                           const std::string& history, Rng& rng) const = 0;
  virtual BitString decode(const Stegotext& cover, const ChannelModel& channel,
                           const std::string& history) const = 0;
  virtual std::string name() const = 0;
};

// For uniform power-of-two channels: each token carries log2(size) bits,
// MSB-first. The final group is zero-padded past the payload; callers that
// need the exact bit length carry it out of band.
class UniformCodec : public Codec {
 public:
  Stegotext encode(const BitString& bits, const ChannelModel& channel,
                   const std::string& history, Rng& rng) const override;
  BitString decode(const Stegotext& cover, const ChannelModel& channel,
                   const std::string& history) const override;
  std::string name() const override { return "uniform"; }
};

// Rejection sampling: for each payload bit, draw tokens from the channel
// until one whose hash bit matches, so output tokens are distributed
// exactly like the cover channel conditioned on the forced bit. A round
// cap of 64 guards against degenerate channels (all mass on one bit value).
class RejectionCodec : public Codec {
 public:
  explicit RejectionCodec(std::size_t max_rounds = 64)
      : max_rounds_(max_rounds) {}

  Stegotext encode(const BitString& bits, const ChannelModel& channel,
                   const std::string& history, Rng& rng) const override;
  BitString decode(const Stegotext& cover, const ChannelModel& channel,
                   const std::string& history) const override;
  std::string name() const override { return "rejection"; }

 private:
  std::size_t max_rounds_;
};

// "uniform" or "rejection". Throws DomainError for unknown names.
std::unique_ptr<Codec> make_codec(const std::string& name);

// Full pipeline: encrypt then embed / extract then decrypt. The extract
// side needs the byte length of the wire ciphertext, which is fixed by
// (curve, s, bias, message length) and recovered from the decode below.
Stegotext stego_encode(const PublicKey& pk, const Bytes& message,
                       const ChannelModel& channel, const Codec& codec,
                       Rng& rng, PaddingPolicy policy = PaddingPolicy::kEighth);
Bytes stego_decode(const KeyPair& keys, const Stegotext& cover,
                   const ChannelModel& channel, const Codec& codec,
                   PaddingPolicy policy = PaddingPolicy::kEighth);

}  // namespace ecstego

#endif  // ECSTEGO_STEGO_HPP_
