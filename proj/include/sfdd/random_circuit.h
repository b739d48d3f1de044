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

#ifndef SFDD_RANDOM_CIRCUIT_H
#define SFDD_RANDOM_CIRCUIT_H

#include <cstdint>
#include <optional>

#include "sfdd/circuit.h"

namespace sfdd {

enum class CircuitFamily {
    /// Layers of random {T, SX, SY, H} on every qubit, each followed by a
    /// random CZ matching.
    Supremacy,
    /// Layers mixing every one- and two-qubit kind with random angles.
    Mixed,
};

struct RandomCircuitOptions {
    int num_qubits = 4;
    int depth = 4;
    std::uint64_t seed = 1;
    /// Probability that a matched pair receives its two-qubit gate.
    double two_qubit_density = 0.5;
    CircuitFamily family = CircuitFamily::Supremacy;
    /// When set with `cut`, at most this many two-qubit gates straddle the
    /// boundary between qubits [0, cut) and [cut, n).
    std::optional<int> cross_block_budget;
    int cut = 0;
};

/// Deterministic for a given options value on every platform.
Circuit generate_random_circuit(const RandomCircuitOptions &options);

}  // namespace sfdd

#endif
