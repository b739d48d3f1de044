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

#include "sfdd/format.h"

#include <cstdio>
#include <stdexcept>

namespace sfdd {

std::string format_real(double x) {
    if (x == 0.0) {
        return "0.0";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    std::string s(buf);
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::string bitstring(std::uint64_t index, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int q = 0; q < n; ++q) {
        if ((index >> q) & 1U) {
            s[static_cast<std::size_t>(n - 1 - q)] = '1';
        }
    }
    return s;
}

std::uint64_t parse_bitstring(const std::string &bits) {
    if (bits.empty() || bits.size() > 63) {
        throw std::invalid_argument("bitstring length must be between 1 and 63");
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring may only contain 0 and 1: '" + bits + "'");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return index;
}

}  // namespace sfdd
