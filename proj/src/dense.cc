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

#include "sfdd/dense.h"

#include <cstdint>
#include <string>

#include "sfdd/errors.h"

namespace sfdd {

namespace {

void apply_matrix(StateVector &state, int n, const std::vector<Qubit> &controls, const std::vector<Qubit> &targets,
                  const DenseMatrix &m) {
    const std::size_t k = targets.size();
    const std::size_t dim = std::size_t{1} << k;
    if (m.dim() != dim) {
        throw std::invalid_argument("operation matrix does not match its target count");
    }
    std::uint64_t control_mask = 0;
    for (Qubit q : controls) {
        control_mask |= std::uint64_t{1} << q;
    }
    std::uint64_t target_mask = 0;
    for (Qubit q : targets) {
        target_mask |= std::uint64_t{1} << q;
    }
    // offsets[j]: index bits set by local matrix index j (first target = MSB).
    std::vector<std::uint64_t> offsets(dim, 0);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t t = 0; t < k; ++t) {
            if ((j >> (k - 1 - t)) & 1) {
                offsets[j] |= std::uint64_t{1} << targets[t];
            }
        }
    }
    std::vector<Complex> in(dim);
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t base = 0; base < size; ++base) {
        if ((base & target_mask) != 0 || (base & control_mask) != control_mask) {
            continue;
        }
        for (std::size_t j = 0; j < dim; ++j) {
            in[j] = state[base | offsets[j]];
        }
        for (std::size_t r = 0; r < dim; ++r) {
            Complex acc = 0.0;
            for (std::size_t c = 0; c < dim; ++c) {
                acc += m(r, c) * in[c];
            }
            state[base | offsets[r]] = acc;
        }
    }
}

}  // namespace

void apply_gate(StateVector &state, int n, const Gate &g) {
    apply_matrix(state, n, {}, g.operands(), gate_matrix(g));
}

void apply_operation(StateVector &state, int n, const Operation &op) {
    apply_matrix(state, n, op.controls, op.targets, op.matrix);
}

StateVector dense_simulate(const Circuit &c, int max_qubits) {
    const int n = c.num_qubits();
    if (n > max_qubits) {
        throw CapacityError("dense simulation limited to " + std::to_string(max_qubits) + " qubits");
    }
    StateVector state(std::size_t{1} << n, 0.0);
    state[0] = 1.0;
    for (const Gate &g : c.gates()) {
        apply_gate(state, n, g);
    }
    return state;
}

}  // namespace sfdd
