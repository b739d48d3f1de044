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

#include "sfdd/circuit.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sfdd {

namespace {

constexpr Complex kI{0.0, 1.0};

constexpr std::array<GateInfo, 21> kGateTable{{
    {GateKind::I, "id", 0, 1, 0},
    {GateKind::X, "x", 0, 1, 0},
    {GateKind::Y, "y", 0, 1, 0},
    {GateKind::Z, "z", 0, 1, 0},
    {GateKind::H, "h", 0, 1, 0},
    {GateKind::S, "s", 0, 1, 0},
    {GateKind::Sdg, "sdg", 0, 1, 0},
    {GateKind::T, "t", 0, 1, 0},
    {GateKind::Tdg, "tdg", 0, 1, 0},
    {GateKind::SX, "sx", 0, 1, 0},
    {GateKind::SY, "sy", 0, 1, 0},
    {GateKind::RX, "rx", 0, 1, 1},
    {GateKind::RY, "ry", 0, 1, 1},
    {GateKind::RZ, "rz", 0, 1, 1},
    {GateKind::P, "p", 0, 1, 1},
    {GateKind::CX, "cx", 1, 1, 0},
    {GateKind::CZ, "cz", 1, 1, 0},
    {GateKind::CP, "cp", 1, 1, 1},
    {GateKind::SWAP, "swap", 0, 2, 0},
    {GateKind::CCX, "ccx", 2, 1, 0},
    {GateKind::CCZ, "ccz", 2, 1, 0},
}};

struct Alias {
    std::string_view name;
    GateKind kind;
};

constexpr std::array<Alias, 7> kAliases{{
    {"i", GateKind::I},
    {"u1", GateKind::P},
    {"phase", GateKind::P},
    {"cu1", GateKind::CP},
    {"cphase", GateKind::CP},
    {"CX", GateKind::CX},
    {"toffoli", GateKind::CCX},
}};

DenseMatrix single_qubit_matrix(GateKind kind, std::span<const double> params) {
    const double r = 1.0 / std::numbers::sqrt2;
    switch (kind) {
        case GateKind::I:
            return DenseMatrix::identity(2);
        case GateKind::X:
            return DenseMatrix(2, {0.0, 1.0, 1.0, 0.0});
        case GateKind::Y:
            return DenseMatrix(2, {0.0, -kI, kI, 0.0});
        case GateKind::Z:
            return DenseMatrix(2, {1.0, 0.0, 0.0, -1.0});
        case GateKind::H:
            return DenseMatrix(2, {r, r, r, -r});
        case GateKind::S:
            return DenseMatrix(2, {1.0, 0.0, 0.0, kI});
        case GateKind::Sdg:
            return DenseMatrix(2, {1.0, 0.0, 0.0, -kI});
        case GateKind::T:
            return DenseMatrix(2, {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)});
        case GateKind::Tdg:
            return DenseMatrix(2, {1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4)});
        case GateKind::SX:
            return DenseMatrix(2, {Complex{0.5, 0.5}, Complex{0.5, -0.5}, Complex{0.5, -0.5}, Complex{0.5, 0.5}});
        case GateKind::SY:
            return DenseMatrix(2, {Complex{0.5, 0.5}, Complex{-0.5, -0.5}, Complex{0.5, 0.5}, Complex{0.5, 0.5}});
        case GateKind::RX: {
            double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
            return DenseMatrix(2, {c, -kI * s, -kI * s, c});
        }
        case GateKind::RY: {
            double c = std::cos(params[0] / 2), s = std::sin(params[0] / 2);
            return DenseMatrix(2, {c, -s, s, c});
        }
        case GateKind::RZ:
            return DenseMatrix(2, {std::polar(1.0, -params[0] / 2), 0.0, 0.0, std::polar(1.0, params[0] / 2)});
        case GateKind::P:
            return DenseMatrix(2, {1.0, 0.0, 0.0, std::polar(1.0, params[0])});
        default:
            throw std::logic_error("not a single-qubit kind");
    }
}

/// Matrix applied to the target of a controlled kind.
DenseMatrix controlled_target_matrix(GateKind kind, std::span<const double> params) {
    switch (kind) {
        case GateKind::CX:
        case GateKind::CCX:
            return single_qubit_matrix(GateKind::X, {});
        case GateKind::CZ:
        case GateKind::CCZ:
            return single_qubit_matrix(GateKind::Z, {});
        case GateKind::CP:
            return single_qubit_matrix(GateKind::P, params);
        default:
            throw std::logic_error("not a controlled kind");
    }
}

}  // namespace

const GateInfo &gate_info(GateKind kind) {
    for (const GateInfo &info : kGateTable) {
        if (info.kind == kind) {
            return info;
        }
    }
    throw std::logic_error("unknown gate kind");
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (const GateInfo &info : kGateTable) {
        if (info.name == name) {
            return info.kind;
        }
    }
    for (const Alias &a : kAliases) {
        if (a.name == name) {
            return a.kind;
        }
    }
    return std::nullopt;
}

std::vector<Qubit> Gate::operands() const {
    std::vector<Qubit> out = controls;
    out.insert(out.end(), targets.begin(), targets.end());
    return out;
}

Gate make_gate(GateKind kind, std::vector<Qubit> operands, std::vector<double> params) {
    const GateInfo &info = gate_info(kind);
    if (operands.size() != static_cast<std::size_t>(info.controls + info.targets)) {
        throw std::invalid_argument("gate '" + std::string(info.name) + "' expects " +
                                    std::to_string(info.controls + info.targets) + " operands, got " +
                                    std::to_string(operands.size()));
    }
    if (params.size() != static_cast<std::size_t>(info.params)) {
        throw std::invalid_argument("gate '" + std::string(info.name) + "' expects " + std::to_string(info.params) +
                                    " parameters, got " + std::to_string(params.size()));
    }
    Gate g;
    g.kind = kind;
    g.params = std::move(params);
    g.controls.assign(operands.begin(), operands.begin() + info.controls);
    g.targets.assign(operands.begin() + info.controls, operands.end());
    return g;
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 62) {
        throw std::invalid_argument("circuit qubit count must be between 1 and 62");
    }
}

Circuit &Circuit::add(Gate g) {
    const GateInfo &info = gate_info(g.kind);
    if (g.controls.size() != static_cast<std::size_t>(info.controls) ||
        g.targets.size() != static_cast<std::size_t>(info.targets) ||
        g.params.size() != static_cast<std::size_t>(info.params)) {
        throw std::invalid_argument("gate '" + std::string(info.name) + "' has the wrong operand or parameter count");
    }
    std::vector<Qubit> ops = g.operands();
    for (Qubit q : ops) {
        if (q < 0 || q >= num_qubits_) {
            throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " +
                                    std::to_string(num_qubits_) + " qubits");
        }
    }
    std::sort(ops.begin(), ops.end());
    if (std::adjacent_find(ops.begin(), ops.end()) != ops.end()) {
        throw std::invalid_argument("gate '" + std::string(info.name) + "' uses a qubit twice");
    }
    for (double p : g.params) {
        if (!std::isfinite(p)) {
            throw std::invalid_argument("gate parameter is not finite");
        }
    }
    gates_.push_back(std::move(g));
    return *this;
}

DenseMatrix gate_matrix(GateKind kind, std::span<const double> params) {
    const GateInfo &info = gate_info(kind);
    if (params.size() != static_cast<std::size_t>(info.params)) {
        throw std::invalid_argument("gate '" + std::string(info.name) + "' expects " + std::to_string(info.params) +
                                    " parameters");
    }
    if (info.controls == 0 && info.targets == 1) {
        return single_qubit_matrix(kind, params);
    }
    if (kind == GateKind::SWAP) {
        return DenseMatrix(4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    }
    DenseMatrix target = controlled_target_matrix(kind, params);
    std::size_t dim = std::size_t{1} << (info.controls + info.targets);
    DenseMatrix full = DenseMatrix::identity(dim);
    std::size_t base = dim - target.dim();
    for (std::size_t r = 0; r < target.dim(); ++r) {
        for (std::size_t c = 0; c < target.dim(); ++c) {
            full(base + r, base + c) = target(r, c);
        }
    }
    return full;
}

Operation to_operation(const Gate &g) {
    const GateInfo &info = gate_info(g.kind);
    Operation op;
    op.controls = g.controls;
    op.targets = g.targets;
    if (info.controls == 0) {
        op.matrix = gate_matrix(g.kind, g.params);
    } else {
        op.matrix = controlled_target_matrix(g.kind, g.params);
    }
    return op;
}

Circuit demo_circuit() {
    Circuit c(4);
    for (Qubit q = 3; q >= 0; --q) {
        c.add(GateKind::H, {q});
    }
    c.add(GateKind::CZ, {3, 1});
    c.add(GateKind::CZ, {2, 0});
    return c;
}

}  // namespace sfdd
