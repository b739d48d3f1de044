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

#ifndef SFDD_SCHRODINGER_H
#define SFDD_SCHRODINGER_H

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sfdd/circuit.h"
#include "sfdd/dd_package.h"
#include "sfdd/errors.h"

namespace sfdd {

/// n-qubit matrix DD of an operation. Controls get identity under their
/// |0><0| branch and the active sub-diagram under |1><1|.
MatrixEdge build_operation_dd(Package &pkg, int n, const Operation &op);
MatrixEdge build_gate_dd(const Gate &g, int n, Package &pkg);

struct SimulationOptions {
    /// Record the node count after every gate (one traversal per gate).
    bool track_nodes = false;
    /// Called after every gate with its index and the new state.
    std::function<void(std::size_t, VectorEdge)> observer;
    Deadline deadline;
};

struct SimulationStats {
    std::vector<std::size_t> nodes_after_gate;
    std::size_t max_nodes = 0;
    std::size_t final_nodes = 0;
    double seconds = 0.0;
};

/// Applies ops in order to `state`, one matrix-vector product each.
VectorEdge apply_operations(Package &pkg, int n, VectorEdge state, std::span<const Operation> ops,
                            const SimulationOptions &options = {}, SimulationStats *stats = nullptr);

/// Simulates c from |0...0>.
VectorEdge simulate(Package &pkg, const Circuit &c, const SimulationOptions &options = {},
                    SimulationStats *stats = nullptr);

}  // namespace sfdd

#endif
