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

#include "ecstego/rng.hpp"

#include <cstring>

#include "ecstego/errors.hpp"
#include "ecstego/sha256.hpp"

namespace ecstego {

Bytes Rng::bytes(std::size_t n) {
  Bytes out(n);
  fill(out.data(), n);
  return out;
}

std::uint64_t Rng::next_u64() {
  std::uint8_t buf[8];
  fill(buf, 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | buf[i];
  return v;
}

std::uint64_t Rng::below_u64(std::uint64_t bound) {
  if (bound == 0) throw DomainError("below_u64: zero bound");
  if (bound == 1) return 0;
  unsigned bits = 64 - static_cast<unsigned>(__builtin_clzll(bound - 1));
  std::uint64_t mask = (bits == 64) ? ~0ull : ((1ull << bits) - 1);
  for (;;) {
    std::uint64_t v = next_u64() & mask;
    if (v < bound) return v;
  }
}

mpz_class Rng::below(const mpz_class& bound) {
  if (bound <= 0) throw DomainError("below: nonpositive bound");
  if (bound == 1) return 0;
  // Rejection sampling on ceil(bits/8) bytes masked down to the bit width
  // of bound - 1; each round accepts with probability > 1/2.
  mpz_class top = bound - 1;
  std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
  std::size_t nbytes = (bits + 7) / 8;
  unsigned head_bits = static_cast<unsigned>(bits - 8 * (nbytes - 1));
  std::uint8_t head_mask =
      (head_bits >= 8) ? 0xff : static_cast<std::uint8_t>((1u << head_bits) - 1);
  Bytes buf(nbytes);
  mpz_class v;
  for (;;) {
    fill(buf.data(), nbytes);
    buf[0] &= head_mask;
    mpz_import(v.get_mpz_t(), nbytes, 1, 1, 0, 0, buf.data());
    if (v < bound) return v;
  }
}

double Rng::unit_real() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

SystemRng::SystemRng() : dev_(std::fopen("/dev/urandom", "rb")) {
  if (dev_ == nullptr) throw InternalError("cannot open /dev/urandom");
  std::setvbuf(dev_, nullptr, _IONBF, 0);
}

SystemRng::~SystemRng() {
  if (dev_ != nullptr) std::fclose(dev_);
}

void SystemRng::fill(std::uint8_t* out, std::size_t n) {
  if (n == 0) return;
  if (std::fread(out, 1, n, dev_) != n) {
    throw InternalError("short read from /dev/urandom");
  }
}

DeterministicRng::DeterministicRng(std::uint64_t seed) {
  std::uint8_t buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<std::uint8_t>(seed >> (56 - 8 * i));
  Sha256::Digest d = Sha256::digest(buf, 8);
  std::memcpy(key_.data(), d.data(), 32);
}

DeterministicRng::DeterministicRng(const Bytes& seed) {
  Sha256::Digest d = Sha256::digest(seed);
  std::memcpy(key_.data(), d.data(), 32);
}

void DeterministicRng::fill(std::uint8_t* out, std::size_t n) {
  while (n > 0) {
    if (pos_ == 32) {
      Sha256 h;
      h.update(key_.data(), 32);
      std::uint8_t ctr[8];
      for (int i = 0; i < 8; ++i) {
        ctr[i] = static_cast<std::uint8_t>(counter_ >> (56 - 8 * i));
      }
      h.update(ctr, 8);
      Sha256::Digest d = h.finish();
      std::memcpy(block_.data(), d.data(), 32);
      ++counter_;
      pos_ = 0;
    }
    std::size_t take = std::min(n, std::size_t{32} - pos_);
    std::memcpy(out, block_.data() + pos_, take);
    out += take;
    pos_ += take;
    n -= take;
  }
}

}  // namespace ecstego
