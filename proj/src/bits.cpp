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

#include "ecstego/bits.hpp"

#include "ecstego/errors.hpp"

namespace ecstego {

BitString BitString::from_bytes(const Bytes& data) {
  BitString out;
  out.data_ = data;
  out.n_ = data.size() * 8;
  return out;
}

BitString BitString::from_ascii(std::string_view bits01) {
  BitString out;
  for (char c : bits01) {
    if (c == '0') {
      out.push_back(0);
    } else if (c == '1') {
      out.push_back(1);
    } else {
      throw FormatError("bit string characters must be '0' or '1'");
    }
  }
  return out;
}

void BitString::push_back(int bit) {
  if (n_ % 8 == 0) data_.push_back(0);
  if (bit != 0) data_[n_ / 8] |= static_cast<std::uint8_t>(0x80u >> (n_ % 8));
  ++n_;
}

void BitString::append(const BitString& other) {
  if (n_ % 8 == 0) {
    // Byte-aligned fast path: bulk copy preserves the packing invariant.
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    n_ += other.n_;
    return;
  }
  for (std::size_t i = 0; i < other.n_; ++i) push_back(other.bit(i));
}

void BitString::append_uint(const mpz_class& value, std::size_t width) {
  if (value < 0) throw DomainError("append_uint: negative value");
  if (mpz_sizeinbase(value.get_mpz_t(), 2) > width && value != 0) {
    throw DomainError("append_uint: value wider than field");
  }
  for (std::size_t i = 0; i < width; ++i) {
    push_back(mpz_tstbit(value.get_mpz_t(), width - 1 - i));
  }
}

int BitString::bit(std::size_t i) const {
  if (i >= n_) throw DomainError("bit index out of range");
  return (data_[i / 8] >> (7 - i % 8)) & 1;
}

mpz_class BitString::read_uint(std::size_t start, std::size_t width) const {
  if (start + width > n_) throw FormatError("read_uint past end of bit string");
  mpz_class v = 0;
  for (std::size_t i = 0; i < width; ++i) {
    v <<= 1;
    if (bit(start + i)) v |= 1;
  }
  return v;
}

BitString BitString::slice(std::size_t start, std::size_t len) const {
  if (start + len > n_) throw FormatError("slice past end of bit string");
  BitString out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(bit(start + i));
  return out;
}

std::string BitString::to_ascii() const {
  std::string out;
  out.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

}  // namespace ecstego
