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

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"

#include "ecstego/bits.hpp"
#include "ecstego/errors.hpp"
#include "ecstego/randtest.hpp"
#include "ecstego/rng.hpp"

using namespace ecstego;

namespace {

BitString bits_of(const char* s) {
  BitString out;
  for (const char* p = s; *p; ++p) out.push_back(*p == '1' ? 1 : 0);
  return out;
}

BitString repeated(int bit, std::size_t n) {
  BitString out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(bit);
  return out;
}

// The 128-bit reference input from SP 800-22 rev. 1a section 2.4.8.
const char* kLongestRunInput =
    "1100110000010101011011000100110011100000000000100100110101010001"
    "0001001111010110100000001101011111001100111001101101100010110010";

}  // namespace

TEST_CASE("published SP 800-22 worked examples reproduce") {
  // Each input and reference p-value is from the rev. 1a example sections;
  // the doc rounds to 6 digits, hence the 1e-3 comparison. The long
  // constants pin this implementation's exact doubles against regressions.
  const TestReport freq = frequency_test(bits_of("1011010101"));
  CHECK(std::fabs(freq.p_value - 0.527089) < 1e-3);
  CHECK(std::fabs(freq.p_value - 0.5270892568655381) < 1e-12);
  CHECK(freq.pass);

  const TestReport block = block_frequency_test(bits_of("0110011010"), 3);
  CHECK(std::fabs(block.p_value - 0.801252) < 1e-3);
  CHECK(std::fabs(block.p_value - 0.8012519569012009) < 1e-12);

  const TestReport runs = runs_test(bits_of("1001101011"));
  CHECK(std::fabs(runs.p_value - 0.147232) < 1e-3);
  CHECK(std::fabs(runs.p_value - 0.14723225536366571) < 1e-12);

  const BitString lr_input = bits_of(kLongestRunInput);
  REQUIRE(lr_input.size() == 128);
  const TestReport lr = longest_run_test(lr_input);
  CHECK(std::fabs(lr.p_value - 0.180598) < 1e-3);
  CHECK(std::fabs(lr.p_value - 0.18059797678555792) < 1e-12);

  const TestReport cusum = cumulative_sums_test(bits_of("1011010111"));
  CHECK(std::fabs(cusum.p_value - 0.4116588) < 1e-3);
  CHECK(std::fabs(cusum.p_value - 0.4115847182525979) < 1e-12);
  // Both scan directions reach the same extreme excursion z = 4 here.
  REQUIRE(cusum.extra_p_values.size() == 1);
  CHECK(cusum.extra_p_values[0] == doctest::Approx(cusum.p_value));

  const TestReport serial = serial_test(bits_of("0011011101"), 3);
  CHECK(std::fabs(serial.p_value - 0.808792) < 1e-3);
  CHECK(std::fabs(serial.p_value - 0.8087921354109989) < 1e-12);
  REQUIRE(serial.extra_p_values.size() == 1);
  CHECK(std::fabs(serial.extra_p_values[0] - 0.670320) < 1e-3);
  CHECK(std::fabs(serial.extra_p_values[0] - 0.6703200460356398) < 1e-12);

  const TestReport apen = approximate_entropy_test(bits_of("0100110101"), 3);
  CHECK(std::fabs(apen.p_value - 0.261961) < 1e-3);
  CHECK(std::fabs(apen.p_value - 0.2619611048816657) < 1e-12);
}

TEST_CASE("pass verdict follows the significance level") {
  const BitString input = bits_of("1011010101");
  CHECK(frequency_test(input, 0.01).pass);
  CHECK_FALSE(frequency_test(input, 0.6).pass);
}

TEST_CASE("degenerate inputs are rejected decisively") {
  const BitString zeros = repeated(0, 100);
  CHECK_FALSE(frequency_test(zeros).pass);
  CHECK(frequency_test(zeros).p_value < 1e-6);

  // Alternating bits are perfectly balanced but run-free.
  BitString alternating;
  for (int i = 0; i < 100; ++i) alternating.push_back(i & 1);
  CHECK(frequency_test(alternating).pass);
  const TestReport runs = runs_test(alternating);
  CHECK_FALSE(runs.pass);
  CHECK(runs.p_value < 1e-6);

  // The runs test declines to run when the frequency prerequisite fails.
  const TestReport ones = runs_test(repeated(1, 100));
  CHECK_FALSE(ones.pass);
  CHECK(ones.p_value == 0.0);
  CHECK(ones.note == "frequency prerequisite failed");

  // A 5-point bias is far outside the monobit tolerance at this length.
  DeterministicRng rng(std::uint64_t{81});
  BitString biased;
  for (int i = 0; i < 100000; ++i) {
    biased.push_back(rng.below_u64(100) < 45 ? 1 : 0);
  }
  CHECK_FALSE(frequency_test(biased).pass);
  CHECK(frequency_test(biased).p_value < 1e-6);
}

TEST_CASE("suite passes a healthy generator end to end") {
  DeterministicRng rng(std::uint64_t{82});
  const BitString stream = BitString::from_bytes(rng.bytes(2500));
  const std::vector<TestReport> reports = run_suite(stream);
  REQUIRE(reports.size() == 7);
  const char* expected_names[] = {
      "frequency",       "block_frequency", "runs",
      "longest_run",     "cumulative_sums", "serial",
      "approximate_entropy"};
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].name == expected_names[i]);
    CHECK(reports[i].pass);
    CHECK(reports[i].p_value >= 0.01);
    CHECK(reports[i].p_value <= 1.0);
  }
}

TEST_CASE("suite flags a biased generator") {
  DeterministicRng rng(std::uint64_t{83});
  BitString biased;
  for (int i = 0; i < 20000; ++i) {
    biased.push_back(rng.below_u64(100) < 45 ? 1 : 0);
  }
  const std::vector<TestReport> reports = run_suite(biased);
  bool any_failed = false;
  for (const TestReport& r : reports) any_failed = any_failed || !r.pass;
  CHECK(any_failed);
}

TEST_CASE("stream splitting is exact and disjoint") {
  DeterministicRng rng(std::uint64_t{84});
  const BitString bits = BitString::from_bytes(rng.bytes(126));  // 1008 bits
  const std::vector<BitString> streams = split_streams(bits, 10);
  REQUIRE(streams.size() == 10);
  for (std::size_t i = 0; i < 10; ++i) {
    REQUIRE(streams[i].size() == 100);  // 8 remainder bits dropped
    for (std::size_t j = 0; j < 100; ++j) {
      CHECK(streams[i].bit(j) == bits.bit(i * 100 + j));
    }
  }
  CHECK_THROWS_AS(split_streams(bits, 0), DomainError);
  CHECK_THROWS_AS(split_streams(bits, 2000), DomainError);
}

TEST_CASE("proportion thresholds match the three-sigma rule") {
  const ProportionResult hundred = proportion_check(97, 100);
  CHECK(hundred.threshold == doctest::Approx(0.9601504).epsilon(1e-5));
  CHECK(hundred.pass);
  CHECK(proportion_check(100, 100).pass);
  CHECK_FALSE(proportion_check(96, 100).pass);
  CHECK_FALSE(proportion_check(95, 100).pass);

  const ProportionResult ten = proportion_check(9, 10);
  CHECK(ten.threshold == doctest::Approx(0.8956083).epsilon(1e-5));
  CHECK(ten.pass);
  CHECK_FALSE(proportion_check(8, 10).pass);

  CHECK_THROWS_AS(proportion_check(0, 0), DomainError);
  CHECK_THROWS_AS(proportion_check(5, 4), DomainError);
}

TEST_CASE("undersized or out-of-range inputs throw") {
  CHECK_THROWS_AS(frequency_test(BitString()), DomainError);
  CHECK_THROWS_AS(block_frequency_test(bits_of("0101"), 0), DomainError);
  CHECK_THROWS_AS(block_frequency_test(bits_of("01"), 3), DomainError);
  CHECK_THROWS_AS(runs_test(bits_of("1")), DomainError);
  CHECK_THROWS_AS(longest_run_test(repeated(1, 127)), DomainError);
  CHECK_THROWS_AS(cumulative_sums_test(bits_of("1")), DomainError);
  CHECK_THROWS_AS(serial_test(bits_of("0101"), 1), DomainError);
  CHECK_THROWS_AS(serial_test(repeated(0, 64), 25), DomainError);
  CHECK_THROWS_AS(approximate_entropy_test(bits_of("0101"), 0), DomainError);
  CHECK_THROWS_AS(approximate_entropy_test(bits_of("01"), 2), DomainError);
  CHECK_THROWS_AS(run_suite(repeated(0, 2047)), DomainError);
}
