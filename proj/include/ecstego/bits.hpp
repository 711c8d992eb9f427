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

#ifndef ECSTEGO_BITS_HPP_
#define ECSTEGO_BITS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ecstego/bytes.hpp"

namespace ecstego {

// Bit string packed MSB-first: bit i lives in byte i/8 at mask 0x80 >> (i%8).
// Unused tail bits of the last byte are kept zero, so equal-length equal
// content strings compare equal bytewise.
class BitString {
 public:
  BitString() = default;

  static BitString from_bytes(const Bytes& data);       // length = 8 * |data|
  static BitString from_ascii(std::string_view bits01); // "0"/"1" characters

  void push_back(int bit);
  void append(const BitString& other);
  // Appends `value` as a big-endian field of exactly `width` bits.
  // value must satisfy 0 <= value < 2^width.
  void append_uint(const mpz_class& value, std::size_t width);

  int bit(std::size_t i) const;
  mpz_class read_uint(std::size_t start, std::size_t width) const;
  BitString slice(std::size_t start, std::size_t len) const;

  // Packed bytes, zero tail padding (ceil(size/8) bytes).
  const Bytes& to_bytes() const { return data_; }
  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }
  std::string to_ascii() const;

  bool operator==(const BitString&) const = default;

 private:
  Bytes data_;
  std::size_t n_ = 0;
};

}  // namespace ecstego

#endif  // ECSTEGO_BITS_HPP_
