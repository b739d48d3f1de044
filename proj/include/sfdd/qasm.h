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

#ifndef SFDD_QASM_H
#define SFDD_QASM_H

#include <string>
#include <string_view>

#include "sfdd/circuit.h"

namespace sfdd {

/// Parses the supported OpenQASM 2 subset (see docs/formats.md). Throws
/// ParseError carrying the line and column of the offending token.
Circuit parse_qasm(std::string_view source);
Circuit load_qasm_file(const std::string &path);

/// One statement per line; parse_qasm(print_qasm(c)) == c.
std::string print_qasm(const Circuit &c);

}  // namespace sfdd

#endif
