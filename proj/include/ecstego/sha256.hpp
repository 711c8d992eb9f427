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

#ifndef ECSTEGO_SHA256_HPP_
#define ECSTEGO_SHA256_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "ecstego/bytes.hpp"

namespace ecstego {

// SHA-256 per FIPS 180-4. Streaming interface plus one-shot helpers.
class Sha256 {
 public:
  using Digest = std::array<std::uint8_t, 32>;

  Sha256();
  void update(const void* data, std::size_t len);
  Digest finish();  // object must not be reused afterwards

  static Digest digest(const void* data, std::size_t len);
  static Digest digest(const Bytes& data);
  static Digest digest(std::string_view data);

 private:
  void compress(const std::uint8_t block[64]);

  std::uint32_t state_[8];
  std::uint8_t buf_[64];
  std::uint64_t total_ = 0;  // bytes fed so far
  std::size_t fill_ = 0;
};

}  // namespace ecstego

#endif  // ECSTEGO_SHA256_HPP_
