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

#include <random>
#include <stdexcept>

#include "gtest/gtest.h"

#include "oracle.h"
#include "sfdd/dense.h"
#include "sfdd/errors.h"
#include "sfdd/random_circuit.h"

using namespace sfdd;

TEST(Circuit, validates_gates) {
    Circuit c(3);
    c.add(GateKind::CX, {0, 2});
    EXPECT_EQ(c.size(), 1u);
    EXPECT_EQ(c.gates()[0].controls, std::vector<Qubit>{0});
    EXPECT_EQ(c.gates()[0].targets, std::vector<Qubit>{2});
    EXPECT_THROW(c.add(GateKind::CX, {0, 3}), std::out_of_range);
    EXPECT_THROW(c.add(GateKind::CX, {1, 1}), std::invalid_argument);
    EXPECT_THROW(c.add(GateKind::H, {0, 1}), std::invalid_argument);
    EXPECT_THROW(c.add(GateKind::RZ, {0}), std::invalid_argument);
    EXPECT_THROW(c.add(GateKind::RZ, {0}, {std::nan("")}), std::invalid_argument);
    EXPECT_THROW(Circuit(0), std::invalid_argument);
    EXPECT_THROW(Circuit(63), std::invalid_argument);
}

TEST(Circuit, names_round_trip) {
    for (int k = 0; k <= static_cast<int>(GateKind::CCZ); ++k) {
        GateKind kind = static_cast<GateKind>(k);
        EXPECT_EQ(gate_kind_from_name(gate_info(kind).name), kind);
    }
    EXPECT_EQ(gate_kind_from_name("u1"), GateKind::P);
    EXPECT_FALSE(gate_kind_from_name("mcx").has_value());
}

TEST(Circuit, gate_matrices_match_oracle_and_are_unitary) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> angle(-4.0, 4.0);
    for (int k = 0; k <= static_cast<int>(GateKind::CCZ); ++k) {
        GateKind kind = static_cast<GateKind>(k);
        const GateInfo &info = gate_info(kind);
        std::vector<Qubit> ops;
        for (int i = 0; i < info.controls + info.targets; ++i) {
            ops.push_back(i);
        }
        std::vector<double> params;
        for (int i = 0; i < info.params; ++i) {
            params.push_back(angle(rng));
        }
        Gate g = make_gate(kind, ops, params);
        DenseMatrix m = gate_matrix(g);
        oracle::Mat o = oracle::local_matrix(g);
        ASSERT_EQ(m.dim(), o.size()) << info.name;
        double diff = 0.0;
        for (std::size_t r = 0; r < m.dim(); ++r) {
            for (std::size_t c = 0; c < m.dim(); ++c) {
                diff = std::max(diff, std::abs(m(r, c) - o[r][c]));
            }
        }
        EXPECT_LT(diff, 1e-15) << info.name;
        EXPECT_LT((m.adjoint() * m).max_abs_diff(DenseMatrix::identity(m.dim())), 1e-14) << info.name;
    }
}

TEST(Circuit, sx_and_sy_square_to_x_and_y) {
    DenseMatrix sx = gate_matrix(GateKind::SX, {});
    DenseMatrix sy = gate_matrix(GateKind::SY, {});
    EXPECT_LT((sx * sx).max_abs_diff(gate_matrix(GateKind::X, {})), 1e-15);
    EXPECT_LT((sy * sy).max_abs_diff(gate_matrix(GateKind::Y, {})), 1e-15);
}

TEST(Circuit, operation_form) {
    Operation op = to_operation(make_gate(GateKind::CP, {3, 1}, {0.5}));
    EXPECT_EQ(op.controls, std::vector<Qubit>{3});
    EXPECT_EQ(op.targets, std::vector<Qubit>{1});
    EXPECT_EQ(op.matrix.dim(), 2u);
    Operation sw = to_operation(make_gate(GateKind::SWAP, {0, 2}));
    EXPECT_TRUE(sw.controls.empty());
    EXPECT_EQ(sw.matrix.dim(), 4u);
}

TEST(Dense, demo_circuit_state) {
    StateVector s = dense_simulate(demo_circuit());
    const int signs[16] = {1, 1, 1, 1, 1, -1, 1, -1, 1, 1, -1, -1, 1, -1, -1, 1};
    for (int i = 0; i < 16; ++i) {
        EXPECT_NEAR(std::abs(s[i] - Complex(0.25 * signs[i])), 0.0, 1e-15) << i;
    }
}

TEST(Dense, matches_oracle_on_random_circuits) {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        RandomCircuitOptions o;
        o.num_qubits = 2 + static_cast<int>(seed % 7);
        o.depth = 6;
        o.seed = seed;
        o.family = seed % 2 ? CircuitFamily::Mixed : CircuitFamily::Supremacy;
        Circuit c = generate_random_circuit(o);
        if (seed % 5 == 0 && c.num_qubits() >= 3) {
            c.add(GateKind::CCX, {2, 0, 1});
            c.add(GateKind::CCZ, {0, 1, 2});
        }
        EXPECT_LT(oracle::max_diff(dense_simulate(c), oracle::simulate(c)), 1e-12) << seed;
    }
}

TEST(Dense, capacity) {
    EXPECT_THROW(dense_simulate(Circuit(21)), CapacityError);
}

TEST(RandomCircuit, deterministic_and_seed_sensitive) {
    RandomCircuitOptions o;
    o.num_qubits = 8;
    o.depth = 10;
    o.seed = 5;
    o.two_qubit_density = 0.4;
    EXPECT_EQ(generate_random_circuit(o), generate_random_circuit(o));
    RandomCircuitOptions other = o;
    other.seed = 6;
    EXPECT_FALSE(generate_random_circuit(o) == generate_random_circuit(other));
}

TEST(RandomCircuit, supremacy_layers) {
    RandomCircuitOptions o;
    o.num_qubits = 6;
    o.depth = 3;
    o.seed = 2;
    o.two_qubit_density = 1.0;
    Circuit c = generate_random_circuit(o);
    // Opening H layer, then each layer: 6 singles plus a full 3-pair matching.
    EXPECT_EQ(c.size(), 6u + 3u * 9u);
    for (const Gate &g : c.gates()) {
        EXPECT_TRUE(g.kind == GateKind::T || g.kind == GateKind::SX || g.kind == GateKind::SY ||
                    g.kind == GateKind::H || g.kind == GateKind::CZ);
    }
}

TEST(RandomCircuit, cross_block_budget) {
    RandomCircuitOptions o;
    o.num_qubits = 10;
    o.depth = 20;
    o.two_qubit_density = 0.8;
    o.cut = 5;
    o.cross_block_budget = 4;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        o.seed = seed;
        EXPECT_LE(oracle::cross_block_count(generate_random_circuit(o), 5), 4u);
    }
}
