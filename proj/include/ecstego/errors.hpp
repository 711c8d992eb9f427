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

#ifndef ECSTEGO_ERRORS_HPP_
#define ECSTEGO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ecstego {

// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's mathematical domain: mixed-modulus field
// arithmetic, inapplicable encoding/curve combination, zero divisor, point
// at infinity where a finite point is required.
struct DomainError : Error {
  using Error::Error;
};

// Malformed external data: wire bytes, key files, channel model files,
// stegotext tokens, ciphertext framing.
struct FormatError : Error {
  using Error::Error;
};

// A statistical acceptance check failed (randomness test verdicts).
struct StatError : Error {
  using Error::Error;
};

// A randomized algorithm exceeded its retry cap, or an internal
// postcondition failed. Never expected on valid inputs.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace ecstego

#endif  // ECSTEGO_ERRORS_HPP_
