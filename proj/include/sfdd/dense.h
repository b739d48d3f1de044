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

#ifndef SFDD_DENSE_H
#define SFDD_DENSE_H

#include "sfdd/circuit.h"
#include "sfdd/linalg.h"

namespace sfdd {

/// Applies the full gate unitary over its operands in place.
void apply_gate(StateVector &state, int n, const Gate &g);
/// Applies matrix on targets when all controls are |1>.
void apply_operation(StateVector &state, int n, const Operation &op);

/// Dense state-vector reference simulation from |0...0>. Throws
/// CapacityError when the circuit has more than max_qubits qubits.
StateVector dense_simulate(const Circuit &c, int max_qubits = 20);

}  // namespace sfdd

#endif
