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

#include "ecstego/stego.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "ecstego/errors.hpp"
#include "ecstego/sha256.hpp"

namespace ecstego {

namespace {

// Trailing '\r' tolerance keeps channel files usable across line endings.
std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

ChannelModel ChannelModel::load(const std::string& text) {
  ChannelModel model;
  std::map<std::string, bool> seen;
  std::istringstream in(text);
  std::string raw;
  double total = 0.0;
  while (std::getline(in, raw)) {
    std::string line = strip_cr(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw FormatError("channel line missing tab separator: " + line);
    }
    std::string token = line.substr(0, tab);
    std::string weight_text = line.substr(tab + 1);
    if (token.empty()) throw FormatError("channel token is empty");
    if (seen.count(token)) throw FormatError("duplicate channel token: " + token);
    seen[token] = true;

    double weight = 0.0;
    std::size_t used = 0;
    try {
      weight = std::stod(weight_text, &used);
    } catch (const std::exception&) {
      throw FormatError("channel weight not a number: " + weight_text);
    }
    if (used != weight_text.size() || !std::isfinite(weight) || weight <= 0.0) {
      throw FormatError("channel weight must be a positive number: " +
                        weight_text);
    }
    model.tokens_.push_back(std::move(token));
    model.probs_.push_back(weight);
    total += weight;
  }
  if (model.tokens_.size() < 2) {
    throw FormatError("channel needs at least 2 tokens");
  }
  double cum = 0.0;
  for (double& w : model.probs_) {
    w /= total;
    cum += w;
    model.cumulative_.push_back(cum);
  }
  model.cumulative_.back() = 1.0;  // guard the last bin against rounding
  for (const std::string& tok : model.tokens_) {
    model.bits_.push_back((Sha256::digest(tok)[31] & 1) != 0);
  }
  return model;
}

ChannelModel ChannelModel::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open channel file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(buf.str());
}

const std::string& ChannelModel::sample(Rng& rng) const {
  double x = rng.unit_real();
  for (std::size_t i = 0; i < cumulative_.size(); ++i) {
    if (x < cumulative_[i]) return tokens_[i];
  }
  return tokens_.back();
}

std::size_t ChannelModel::index_of(const std::string& token) const {
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (tokens_[i] == token) return i;
  }
  throw FormatError("token not in channel alphabet: " + token);
}

bool ChannelModel::uniform_power_of_two() const {
  std::size_t n = tokens_.size();
  if ((n & (n - 1)) != 0) return false;
  for (double w : probs_) {
    if (std::abs(w - 1.0 / static_cast<double>(n)) > 1e-9) return false;
  }
  return true;
}

std::size_t ChannelModel::bits_per_token() const {
  if (!uniform_power_of_two()) {
    throw DomainError("channel is not uniform with power-of-two size");
  }
  std::size_t b = 0;
  for (std::size_t n = tokens_.size(); n > 1; n >>= 1) ++b;
  return b;
}

bool ChannelModel::token_bit(std::size_t index) const { return bits_[index]; }

std::pair<double, double> ChannelModel::bit_mass() const {
  double zero = 0.0;
  double one = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    (bits_[i] ? one : zero) += probs_[i];
  }
  return {zero, one};
}

std::string Stegotext::to_text() const {
  std::string out;
  for (const std::string& tok : tokens) {
    out += tok;
    out += '\n';
  }
  return out;
}

Stegotext Stegotext::from_text(const std::string& text) {
  Stegotext st;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = strip_cr(raw);
    if (line.empty()) continue;
    st.tokens.push_back(line);
  }
  return st;
}

Stegotext UniformCodec::encode(const BitString& bits,
                               const ChannelModel& channel,
                               const std::string& history, Rng& rng) const {
  (void)history;
  (void)rng;
  std::size_t b = channel.bits_per_token();
  Stegotext out;
  for (std::size_t i = 0; i < bits.size(); i += b) {
    std::size_t index = 0;
    for (std::size_t j = 0; j < b; ++j) {
      // Zero padding fills the final group past the payload.
      int bit = (i + j < bits.size()) ? bits.bit(i + j) : 0;
      index = (index << 1) | static_cast<std::size_t>(bit);
    }
    out.tokens.push_back(channel.tokens()[index]);
  }
  return out;
}

BitString UniformCodec::decode(const Stegotext& cover,
                               const ChannelModel& channel,
                               const std::string& history) const {
  (void)history;
  std::size_t b = channel.bits_per_token();
  BitString out;
  for (const std::string& tok : cover.tokens) {
    std::size_t index = channel.index_of(tok);
    for (std::size_t j = b; j-- > 0;) {
      out.push_back(static_cast<int>((index >> j) & 1));
    }
  }
  return out;
}

Stegotext RejectionCodec::encode(const BitString& bits,
                                 const ChannelModel& channel,
                                 const std::string& history, Rng& rng) const {
  (void)history;
  auto [zero_mass, one_mass] = channel.bit_mass();
  if (zero_mass <= 0.0 || one_mass <= 0.0) {
    throw DomainError(
        "channel hash bit is constant; rejection embedding cannot terminate");
  }
  Stegotext out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    bool want = bits.bit(i) != 0;
    bool placed = false;
    for (std::size_t round = 0; round < max_rounds_; ++round) {
      const std::string& tok = channel.sample(rng);
      if (channel.token_bit(channel.index_of(tok)) == want) {
        out.tokens.push_back(tok);
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw InternalError("rejection embedding exceeded its retry cap");
    }
  }
  return out;
}

BitString RejectionCodec::decode(const Stegotext& cover,
                                 const ChannelModel& channel,
                                 const std::string& history) const {
  (void)history;
  BitString out;
  for (const std::string& tok : cover.tokens) {
    out.push_back(channel.token_bit(channel.index_of(tok)) ? 1 : 0);
  }
  return out;
}

std::unique_ptr<Codec> make_codec(const std::string& name) {
  if (name == "uniform") return std::make_unique<UniformCodec>();
  if (name == "rejection") return std::make_unique<RejectionCodec>();
  throw DomainError("unknown codec: " + name);
}

Stegotext stego_encode(const PublicKey& pk, const Bytes& message,
                       const ChannelModel& channel, const Codec& codec,
                       Rng& rng, PaddingPolicy policy) {
  Ciphertext ct = encrypt(pk, message, rng, policy);
  BitString payload = BitString::from_bytes(ciphertext_to_bytes(ct));
  return codec.encode(payload, channel, std::string(), rng);
}

Bytes stego_decode(const KeyPair& keys, const Stegotext& cover,
                   const ChannelModel& channel, const Codec& codec,
                   PaddingPolicy policy) {
  BitString payload = codec.decode(cover, channel, std::string());
  // Codec groups may overshoot the byte stream; whole bytes carry the wire.
  Bytes wire(payload.to_bytes().begin(),
             payload.to_bytes().begin() +
                 static_cast<long>(payload.size() / 8));
  BiasParams bias = default_bias_params(*keys.pub.curve, policy);
  Ciphertext ct =
      ciphertext_from_bytes(wire, *keys.pub.curve, keys.pub.s, bias);
  return decrypt(keys, ct, policy);
}

}  // namespace ecstego
