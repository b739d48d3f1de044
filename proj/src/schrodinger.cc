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

#include "sfdd/schrodinger.h"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

namespace sfdd {

namespace {

enum class Role { None, Control, Target };

struct OperationBuilder {
    Package &pkg;
    const Operation &op;
    std::vector<Role> role;
    std::vector<int> target_pos;  // position of a target qubit within op.targets

    /// Sub-diagram on levels 0..level with the target row/column bits chosen
    /// so far (first target most significant).
    MatrixEdge build(int level, std::size_t row, std::size_t col) {
        if (level < 0) {
            return pkg.matrix_scalar(op.matrix(row, col));
        }
        const std::size_t k = op.targets.size();
        switch (role[static_cast<std::size_t>(level)]) {
            case Role::None: {
                MatrixEdge sub = build(level - 1, row, col);
                return pkg.make_matrix_node(level, {sub, MatrixEdge{}, MatrixEdge{}, sub});
            }
            case Role::Control: {
                // With this control at |0> the operation is the identity, so
                // only blocks whose chosen target bits agree survive.
                MatrixEdge idle = row == col ? pkg.identity(level) : MatrixEdge{};
                return pkg.make_matrix_node(level, {idle, MatrixEdge{}, MatrixEdge{}, build(level - 1, row, col)});
            }
            case Role::Target: {
                const std::size_t bit = std::size_t{1} << (k - 1 - static_cast<std::size_t>(target_pos[level]));
                std::array<MatrixEdge, 4> succ;
                for (std::size_t r = 0; r < 2; ++r) {
                    for (std::size_t c = 0; c < 2; ++c) {
                        succ[2 * r + c] = build(level - 1, row | (r ? bit : 0), col | (c ? bit : 0));
                    }
                }
                return pkg.make_matrix_node(level, succ);
            }
        }
        throw std::logic_error("unreachable");
    }
};

}  // namespace

MatrixEdge build_operation_dd(Package &pkg, int n, const Operation &op) {
    if (op.targets.empty() || op.matrix.dim() != (std::size_t{1} << op.targets.size())) {
        throw std::invalid_argument("operation matrix does not match its target count");
    }
    OperationBuilder b{pkg, op, std::vector<Role>(static_cast<std::size_t>(n), Role::None),
                       std::vector<int>(static_cast<std::size_t>(n), -1)};
    auto claim = [&](Qubit q, Role r) {
        if (q < 0 || q >= n) {
            throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " + std::to_string(n) +
                                    " qubits");
        }
        if (b.role[static_cast<std::size_t>(q)] != Role::None) {
            throw std::invalid_argument("operation uses a qubit twice");
        }
        b.role[static_cast<std::size_t>(q)] = r;
    };
    for (Qubit q : op.controls) {
        claim(q, Role::Control);
    }
    for (std::size_t t = 0; t < op.targets.size(); ++t) {
        claim(op.targets[t], Role::Target);
        b.target_pos[static_cast<std::size_t>(op.targets[t])] = static_cast<int>(t);
    }
    return b.build(n - 1, 0, 0);
}

MatrixEdge build_gate_dd(const Gate &g, int n, Package &pkg) {
    return build_operation_dd(pkg, n, to_operation(g));
}

VectorEdge apply_operations(Package &pkg, int n, VectorEdge state, std::span<const Operation> ops,
                            const SimulationOptions &options, SimulationStats *stats) {
    auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        options.deadline.check();
        MatrixEdge m = build_operation_dd(pkg, n, ops[i]);
        state = pkg.multiply(m, state);
        if (stats != nullptr && options.track_nodes) {
            std::size_t nodes = pkg.size(state);
            stats->nodes_after_gate.push_back(nodes);
            stats->max_nodes = std::max(stats->max_nodes, nodes);
        }
        if (options.observer) {
            options.observer(i, state);
        }
        if (pkg.gc_due()) {
            pkg.gc(std::span<const VectorEdge>(&state, 1));
        }
    }
    if (stats != nullptr) {
        stats->final_nodes = pkg.size(state);
        stats->max_nodes = std::max(stats->max_nodes, stats->final_nodes);
        stats->seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    return state;
}

VectorEdge simulate(Package &pkg, const Circuit &c, const SimulationOptions &options, SimulationStats *stats) {
    std::vector<Operation> ops;
    ops.reserve(c.size());
    for (const Gate &g : c.gates()) {
        ops.push_back(to_operation(g));
    }
    VectorEdge state = pkg.make_basis_state(c.num_qubits(), std::uint64_t{0});
    return apply_operations(pkg, c.num_qubits(), state, ops, options, stats);
}

}  // namespace sfdd
