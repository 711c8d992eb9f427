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

#ifndef ECSTEGO_BYTES_HPP_
#define ECSTEGO_BYTES_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ecstego {

using Bytes = std::vector<std::uint8_t>;

std::string to_hex(const Bytes& data);
Bytes from_hex(std::string_view hex);  // throws FormatError on bad input

}  // namespace ecstego

#endif  // ECSTEGO_BYTES_HPP_
