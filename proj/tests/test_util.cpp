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

#include <cstdint>
#include <map>
#include <string>

#include "doctest.h"

#include "ecstego/bits.hpp"
#include "ecstego/bytes.hpp"
#include "ecstego/errors.hpp"
#include "ecstego/rng.hpp"
#include "ecstego/sha256.hpp"
#include "ecstego/special.hpp"

using namespace ecstego;

TEST_CASE("hex round trip and parse errors") {
  CHECK(to_hex({0x00, 0xff, 0x5a}) == "00ff5a");
  CHECK(from_hex("00ff5a") == Bytes{0x00, 0xff, 0x5a});
  CHECK(from_hex("ABCD") == Bytes{0xab, 0xcd});
  CHECK(from_hex("") == Bytes{});
  CHECK_THROWS_AS(from_hex("abc"), FormatError);
  CHECK_THROWS_AS(from_hex("zz"), FormatError);
}

// FIPS 180-4 known-answer vectors.
TEST_CASE("sha256 standard vectors") {
  const auto empty = Sha256::digest("");
  CHECK(to_hex(Bytes(empty.begin(), empty.end())) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  const auto abc = Sha256::digest("abc");
  CHECK(to_hex(Bytes(abc.begin(), abc.end())) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const auto two = Sha256::digest(
      "abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq");
  CHECK(to_hex(Bytes(two.begin(), two.end())) ==
        "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
  const auto million = [] {
    Sha256 h;
    const std::string chunk(1000, 'a');
    for (int i = 0; i < 1000; ++i) h.update(chunk.data(), chunk.size());
    return h.finish();
  }();
  CHECK(to_hex(Bytes(million.begin(), million.end())) ==
        "cdc76e5c9914fb9281a1c7e284d73e67f1809a48a497200e046d39ccc7112cd0");
}

TEST_CASE("sha256 streaming equals one shot at odd chunkings") {
  DeterministicRng rng(std::uint64_t{123});
  const Bytes data = rng.bytes(1000);
  const auto whole = Sha256::digest(data);
  for (std::size_t chunk : {1, 3, 17, 64, 65, 999}) {
    Sha256 h;
    for (std::size_t off = 0; off < data.size(); off += chunk) {
      h.update(data.data() + off, std::min(chunk, data.size() - off));
    }
    CHECK(h.finish() == whole);
  }
}

TEST_CASE("deterministic rng reproducible and seed separated") {
  DeterministicRng a(std::uint64_t{42});
  DeterministicRng b(std::uint64_t{42});
  DeterministicRng c(std::uint64_t{43});
  const Bytes x = a.bytes(100);
  CHECK(x == b.bytes(100));
  CHECK(x != c.bytes(100));
  DeterministicRng d(Bytes{1, 2, 3});
  DeterministicRng e(Bytes{1, 2, 3});
  CHECK(d.bytes(33) == e.bytes(33));
}

TEST_CASE("rng bounded draws stay in range and cover values") {
  DeterministicRng rng(std::uint64_t{7});
  std::map<std::uint64_t, int> seen;
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t v = rng.below_u64(5);
    REQUIRE(v < 5);
    ++seen[v];
  }
  CHECK(seen.size() == 5);

  const mpz_class bound("123456789123456789123456789");
  for (int i = 0; i < 200; ++i) {
    const mpz_class v = rng.below(bound);
    REQUIRE(v >= 0);
    REQUIRE(v < bound);
  }
  CHECK(rng.below(1) == 0);

  for (int i = 0; i < 1000; ++i) {
    const double u = rng.unit_real();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("system rng produces distinct draws") {
  SystemRng rng;
  CHECK(rng.bytes(32) != rng.bytes(32));
}

TEST_CASE("bit string packing is MSB first") {
  BitString s;
  s.push_back(1);
  s.push_back(0);
  s.push_back(1);
  CHECK(s.size() == 3);
  CHECK(s.to_bytes() == Bytes{0xa0});
  CHECK(s.bit(0) == 1);
  CHECK(s.bit(1) == 0);
  CHECK(s.bit(2) == 1);
  CHECK(s.to_ascii() == "101");
  CHECK(BitString::from_ascii("101") == s);
}

TEST_CASE("bit string byte round trip") {
  const Bytes data{0xde, 0xad, 0xbe, 0xef};
  const BitString s = BitString::from_bytes(data);
  CHECK(s.size() == 32);
  CHECK(s.to_bytes() == data);
  CHECK(s.bit(0) == 1);  // 0xde starts 1101...
  CHECK(s.bit(3) == 1);
  CHECK(s.bit(2) == 0);
}

TEST_CASE("append_uint and read_uint are inverse at odd widths") {
  DeterministicRng rng(std::uint64_t{99});
  for (std::size_t width : {1, 3, 7, 8, 11, 64, 121, 288}) {
    BitString s;
    std::vector<mpz_class> values;
    for (int i = 0; i < 5; ++i) {
      mpz_class bound = 1;
      mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), width);
      values.push_back(rng.below(bound));
      s.append_uint(values.back(), width);
    }
    CHECK(s.size() == 5 * width);
    for (int i = 0; i < 5; ++i) {
      CHECK(s.read_uint(i * width, width) == values[i]);
    }
  }
}

TEST_CASE("append_uint rejects oversized values") {
  BitString s;
  CHECK_THROWS_AS(s.append_uint(4, 2), DomainError);
  s.append_uint(3, 2);
  CHECK(s.to_ascii() == "11");
}

TEST_CASE("slice and append agree with ascii model") {
  const BitString s = BitString::from_ascii("110100111010110");
  CHECK(s.slice(0, 4).to_ascii() == "1101");
  CHECK(s.slice(3, 7).to_ascii() == "1001110");
  CHECK(s.slice(14, 1).to_ascii() == "0");
  CHECK(s.slice(15, 0).to_ascii() == "");
  CHECK_THROWS_AS(s.slice(10, 6), FormatError);
  BitString t = s.slice(0, 5);
  t.append(s.slice(5, 10));
  CHECK(t == s);
}

// Spot values for the incomplete gamma machinery, pinned against published
// tables (scipy.special.gammaincc at 12 digits).
TEST_CASE("upper incomplete gamma spot values") {
  CHECK(igamc(1.0, 1.0) == doctest::Approx(0.367879441171).epsilon(1e-9));
  CHECK(igamc(0.5, 0.5) == doctest::Approx(0.317310507863).epsilon(1e-9));
  CHECK(igamc(2.0, 0.8) == doctest::Approx(0.808792135411).epsilon(1e-9));
  CHECK(igamc(1.5, 2.440745) == doctest::Approx(0.180683574849).epsilon(1e-9));
  CHECK(igamc(4.0, 1.909548) == doctest::Approx(0.873065178686).epsilon(1e-9));
  CHECK(igamc(24.5, 23.1) == doctest::Approx(0.587330696583).epsilon(1e-9));
  CHECK(igamc(1.0, 0.0) == 1.0);
  CHECK(chisq_pvalue(0.0, 4.0) == 1.0);
  CHECK(chisq_pvalue(1.6, 4.0) == doctest::Approx(0.808792135411).epsilon(1e-9));
  CHECK_THROWS_AS(igamc(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(igamc(1.0, -1.0), DomainError);
}
