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

#ifndef ECSTEGO_RNG_HPP_
#define ECSTEGO_RNG_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdio>

#include <gmpxx.h>

#include "ecstego/bytes.hpp"

namespace ecstego {

// Injected randomness source. Instances are stateful and must stay confined
// to one thread; everything else in the library is immutable.
class Rng {
 public:
  virtual ~Rng() = default;
  virtual void fill(std::uint8_t* out, std::size_t n) = 0;

  Bytes bytes(std::size_t n);
  std::uint64_t next_u64();
  // Uniform in [0, bound) by rejection sampling on bound's bit width.
  std::uint64_t below_u64(std::uint64_t bound);
  mpz_class below(const mpz_class& bound);
  // Uniform in [0, 1) with 53 random mantissa bits.
  double unit_real();
};

// Wraps the operating system entropy pool (/dev/urandom).
class SystemRng final : public Rng {
 public:
  SystemRng();
  ~SystemRng() override;
  SystemRng(const SystemRng&) = delete;
  SystemRng& operator=(const SystemRng&) = delete;
  void fill(std::uint8_t* out, std::size_t n) override;

 private:
  std::FILE* dev_;
};

// SHA-256 counter stream keyed by a seed. Reproducible by construction;
// intended for tests and the CLI's --insecure-deterministic mode only.
class DeterministicRng final : public Rng {
 public:
  explicit DeterministicRng(std::uint64_t seed);
  explicit DeterministicRng(const Bytes& seed);
  void fill(std::uint8_t* out, std::size_t n) override;

 private:
  std::array<std::uint8_t, 32> key_;
  std::array<std::uint8_t, 32> block_;
  std::uint64_t counter_ = 0;
  std::size_t pos_ = 32;  // forces a refill on first use
};

}  // namespace ecstego

#endif  // ECSTEGO_RNG_HPP_
