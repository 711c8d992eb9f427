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

#ifndef ECSTEGO_RANDTEST_HPP_
#define ECSTEGO_RANDTEST_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "ecstego/bits.hpp"

namespace ecstego {

// One statistical test outcome. Tests that naturally produce several
// p-values (serial, cumulative sums) report the first as p_value and the
// rest in extra_p_values; pass reflects p_value alone.
struct TestReport {
  std::string name;
  double p_value = 0.0;
  bool pass = false;
  std::vector<double> extra_p_values;
  std::string note;  // intermediate statistics, for diagnostics
};

// The seven tests, following NIST SP 800-22 rev. 1a. Each throws
// DomainError if the input is shorter than the test's minimum.
TestReport frequency_test(const BitString& bits, double alpha = 0.01);
TestReport block_frequency_test(const BitString& bits, std::size_t block_len,
                                double alpha = 0.01);
TestReport runs_test(const BitString& bits, double alpha = 0.01);
TestReport longest_run_test(const BitString& bits, double alpha = 0.01);
TestReport cumulative_sums_test(const BitString& bits, double alpha = 0.01);
TestReport serial_test(const BitString& bits, std::size_t m,
                       double alpha = 0.01);
TestReport approximate_entropy_test(const BitString& bits, std::size_t m,
                                    double alpha = 0.01);

// All seven with the parameter choices used operationally: block length
// max(128, n/100), serial and approximate entropy block order 5 clamped
// so the chi-square approximations stay valid. Requires n >= 2048.
std::vector<TestReport> run_suite(const BitString& bits, double alpha = 0.01);

// Split one long string into `count` disjoint streams of equal length.
std::vector<BitString> split_streams(const BitString& bits, std::size_t count);

// Multi-stream proportion verdict: with `total` streams at significance
// alpha, the accepted range is proportion > 1 - alpha - 3*sqrt(alpha*(1 -
// alpha)/total).
struct ProportionResult {
  std::size_t passed = 0;
  std::size_t total = 0;
  double proportion = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

ProportionResult proportion_check(std::size_t passed, std::size_t total,
                                  double alpha = 0.01);

}  // namespace ecstego

#endif  // ECSTEGO_RANDTEST_HPP_
