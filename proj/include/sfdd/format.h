// Copyright 2026 The sfdd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SFDD_FORMAT_H
#define SFDD_FORMAT_H

#include <cstdint>
#include <string>

namespace sfdd {

/// 17 significant digits, always with a decimal point or exponent
/// ("1.0", "-0.25", "1.0000000000000001e-20"). Negative zero prints as "0.0".
std::string format_real(double x);

/// Basis state label q_{n-1}...q_0 for an amplitude index.
std::string bitstring(std::uint64_t index, int n);

/// Inverse of bitstring(); throws std::invalid_argument on bad characters.
std::uint64_t parse_bitstring(const std::string &bits);

}  // namespace sfdd

#endif
