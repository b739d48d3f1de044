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

#ifndef SFDD_CIRCUIT_H
#define SFDD_CIRCUIT_H

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfdd/linalg.h"

namespace sfdd {

using Qubit = int;

enum class GateKind {
    I,
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    T,
    Tdg,
    SX,
    SY,
    RX,
    RY,
    RZ,
    P,
    CX,
    CZ,
    CP,
    SWAP,
    CCX,
    CCZ,
};

struct GateInfo {
    GateKind kind;
    std::string_view name;  // QASM spelling used by the printer
    int controls;
    int targets;
    int params;
};

const GateInfo &gate_info(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

/// One gate application. Operands are controls followed by targets; for a
/// multi-qubit matrix the first operand is the most significant index bit.
struct Gate {
    GateKind kind = GateKind::I;
    std::vector<double> params;
    std::vector<Qubit> controls;
    std::vector<Qubit> targets;

    std::vector<Qubit> operands() const;
    friend bool operator==(const Gate &, const Gate &) = default;
};

Gate make_gate(GateKind kind, std::vector<Qubit> operands, std::vector<double> params = {});

/// Qubit count plus gates in application order. Every gate added is
/// validated against the register size.
class Circuit {
   public:
    explicit Circuit(int num_qubits);

    int num_qubits() const {
        return num_qubits_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    std::size_t size() const {
        return gates_.size();
    }

    Circuit &add(Gate g);
    Circuit &add(GateKind kind, std::vector<Qubit> operands, std::vector<double> params = {}) {
        return add(make_gate(kind, std::move(operands), std::move(params)));
    }

    friend bool operator==(const Circuit &, const Circuit &) = default;

   private:
    int num_qubits_;
    std::vector<Gate> gates_;
};

/// Full 2^k x 2^k unitary of a gate over its operands (controls included).
/// Throws std::invalid_argument on wrong parameter arity.
DenseMatrix gate_matrix(GateKind kind, std::span<const double> params);
inline DenseMatrix gate_matrix(const Gate &g) {
    return gate_matrix(g.kind, g.params);
}

/// A linear operator on a few qubits: `matrix` acts on `targets` (first
/// target most significant) when every control qubit is |1>, identity
/// otherwise. Not necessarily unitary; hybrid path factors are projectors.
struct Operation {
    std::vector<Qubit> controls;
    std::vector<Qubit> targets;
    DenseMatrix matrix;
};

/// Controlled kinds keep their controls (CX -> X on the target under one
/// control); SWAP becomes a 4x4 on two targets.
Operation to_operation(const Gate &g);

/// Four-qubit demo: H on every qubit, then CZ(q3, q1) and CZ(q2, q0).
Circuit demo_circuit();

}  // namespace sfdd

#endif
