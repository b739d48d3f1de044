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

#include "sfdd/hybrid.h"

#include <random>

#include "gtest/gtest.h"
#include "json.hpp"

#include "oracle.h"
#include "sfdd/dense.h"
#include "sfdd/random_circuit.h"
#include "sfdd/schrodinger.h"

using namespace sfdd;

namespace {

const double kDemo[16] = {1, 1, 1, 1, 1, -1, 1, -1, 1, 1, -1, -1, 1, -1, -1, 1};

oracle::Vec demo_vector() {
    oracle::Vec v(16);
    for (int i = 0; i < 16; ++i) {
        v[i] = 0.25 * kDemo[i];
    }
    return v;
}

oracle::Mat to_mat(const DenseMatrix &m) {
    oracle::Mat out(m.dim(), std::vector<oracle::C>(m.dim()));
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            out[r][c] = m(r, c);
        }
    }
    return out;
}

void expect_matrix(const DenseMatrix &m, std::initializer_list<Complex> entries) {
    DenseMatrix expect(m.dim(), entries);
    EXPECT_LT(m.max_abs_diff(expect), 1e-15);
}

Circuit mixed_circuit(int n, int depth, std::uint64_t seed) {
    RandomCircuitOptions o;
    o.num_qubits = n;
    o.depth = depth;
    o.seed = seed;
    o.family = CircuitFamily::Mixed;
    o.two_qubit_density = 0.5;
    o.cut = n / 2;
    o.cross_block_budget = 6;
    return generate_random_circuit(o);
}

}  // namespace

TEST(Classify, demo_circuit) {
    Classification cl = classify(demo_circuit(), Partition{2});
    EXPECT_EQ(cl.lower_gates.size(), 2u);
    EXPECT_EQ(cl.upper_gates.size(), 2u);
    ASSERT_EQ(cl.decisions.size(), 2u);
    EXPECT_EQ(cl.decisions[0].gate_index, 4u);
    EXPECT_EQ(cl.decisions[1].gate_index, 5u);
    EXPECT_EQ(cl.decisions[0].upper_qubit, 3);
    EXPECT_EQ(cl.decisions[0].lower_qubit, 1);
    EXPECT_EQ(path_count(cl.decisions), 4u);
}

TEST(Classify, decision_count_matches_recount) {
    RandomCircuitOptions o;
    o.num_qubits = 8;
    o.depth = 10;
    o.seed = 11;
    o.two_qubit_density = 0.5;
    Circuit c = generate_random_circuit(o);
    Classification cl = classify(c, Partition{4});
    EXPECT_EQ(cl.decisions.size(), oracle::cross_block_count(c, 4));
    EXPECT_EQ(cl.lower_gates.size() + cl.upper_gates.size() + cl.decisions.size(), c.size());
}

TEST(Classify, no_cross_gates_single_path) {
    Circuit c(4);
    c.add(GateKind::H, {0}).add(GateKind::CX, {0, 1}).add(GateKind::CZ, {2, 3});
    Classification cl = classify(c, Partition{2});
    EXPECT_TRUE(cl.decisions.empty());
    EXPECT_EQ(path_count(cl.decisions), 1u);
}

TEST(Classify, three_qubit_cross_gate_is_topology_error) {
    Circuit c(4);
    c.add(GateKind::H, {0}).add(GateKind::CCX, {0, 1, 2}).add(GateKind::CCZ, {3, 2, 1});
    try {
        classify(c, Partition{2});
        FAIL();
    } catch (const TopologyError &e) {
        EXPECT_EQ(e.gate_index(), 1u);
    }
    // The same gate inside one block is fine.
    Circuit inside(4);
    inside.add(GateKind::CCX, {0, 1, 2}).add(GateKind::CZ, {3, 0});
    EXPECT_EQ(classify(inside, Partition{3}).decisions.size(), 1u);
    EXPECT_THROW(classify(c, Partition{0}), std::invalid_argument);
    EXPECT_THROW(classify(c, Partition{4}), std::invalid_argument);
}

TEST(SchmidtTerms, cz) {
    DecisionPoint d = schmidt_terms(make_gate(GateKind::CZ, {3, 1}), Partition{2});
    ASSERT_EQ(d.terms.size(), 2u);
    expect_matrix(d.terms[0].upper, {1, 0, 0, 0});
    expect_matrix(d.terms[0].lower, {1, 0, 0, 1});
    expect_matrix(d.terms[1].upper, {0, 0, 0, 1});
    expect_matrix(d.terms[1].lower, {1, 0, 0, -1});
    EXPECT_LT(reconstruct(d).max_abs_diff(DenseMatrix(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1})), 1e-12);
}

TEST(SchmidtTerms, cx_upper_control) {
    DecisionPoint d = schmidt_terms(make_gate(GateKind::CX, {3, 0}), Partition{2});
    ASSERT_EQ(d.terms.size(), 2u);
    expect_matrix(d.terms[0].lower, {1, 0, 0, 1});
    expect_matrix(d.terms[1].lower, {0, 1, 1, 0});
}

TEST(SchmidtTerms, reconstruction_for_every_two_qubit_kind) {
    for (GateKind k : {GateKind::CX, GateKind::CZ, GateKind::CP, GateKind::SWAP}) {
        for (bool upper_first : {true, false}) {
            std::vector<Qubit> ops = upper_first ? std::vector<Qubit>{3, 1} : std::vector<Qubit>{0, 2};
            Gate g = make_gate(k, ops, k == GateKind::CP ? std::vector<double>{0.9} : std::vector<double>{});
            DecisionPoint d = schmidt_terms(g, Partition{2});
            // Oracle: gate matrix on (upper, lower) order.
            Circuit probe(2);
            probe.add(k, upper_first ? std::vector<Qubit>{1, 0} : std::vector<Qubit>{0, 1}, g.params);
            oracle::Mat m(4, std::vector<oracle::C>(4));
            for (std::size_t c = 0; c < 4; ++c) {
                oracle::Vec e(4, 0.0);
                e[c] = 1.0;
                oracle::apply(e, probe.gates()[0]);
                for (std::size_t r = 0; r < 4; ++r) {
                    m[r][c] = e[r];
                }
            }
            oracle::Mat rec = to_mat(reconstruct(d));
            double diff = 0.0;
            for (std::size_t r = 0; r < 4; ++r) {
                for (std::size_t c = 0; c < 4; ++c) {
                    diff = std::max(diff, std::abs(rec[r][c] - m[r][c]));
                }
            }
            EXPECT_LT(diff, 1e-12) << gate_info(k).name << upper_first;
            EXPECT_GE(d.terms.size(), 1u);
            EXPECT_LE(d.terms.size(), 4u);
        }
    }
    EXPECT_EQ(schmidt_terms(make_gate(GateKind::SWAP, {0, 3}), Partition{2}).terms.size(), 4u);
    EXPECT_EQ(schmidt_terms(make_gate(GateKind::CX, {0, 3}), Partition{2}).terms.size(), 4u);
    EXPECT_THROW(schmidt_terms(make_gate(GateKind::CZ, {0, 1}), Partition{2}), std::invalid_argument);
    EXPECT_THROW(schmidt_terms(make_gate(GateKind::H, {0}), Partition{2}), std::invalid_argument);
}

TEST(PathIdTest, encoding) {
    Circuit c(4);
    c.add(GateKind::CZ, {3, 0}).add(GateKind::SWAP, {1, 2}).add(GateKind::CZ, {2, 1});
    auto decisions = classify(c, Partition{2}).decisions;
    EXPECT_EQ(path_count(decisions), 16u);
    PathId p = PathId::from_index(13, decisions);
    EXPECT_EQ(p.to_string(), "121");
    EXPECT_EQ(p.index(decisions), 13u);
    for (std::uint64_t i = 0; i < 16; ++i) {
        EXPECT_EQ(PathId::from_index(i, decisions).index(decisions), i);
    }
    EXPECT_THROW(PathId::from_index(16, decisions), std::out_of_range);
    EXPECT_THROW((PathId{{2, 0, 0}}).index(decisions), std::out_of_range);
}

TEST(PathIdTest, overflow) {
    Circuit c(2);
    for (int i = 0; i < 63; ++i) {
        c.add(GateKind::CZ, {1, 0});
    }
    EXPECT_THROW(path_count(classify(c, Partition{1}).decisions), CapacityError);
    HybridOptions o;
    EXPECT_THROW(run_hybrid_amp(c, o), CapacityError);
}

TEST(SimulatePath, demo_paths) {
    BlockProgram program(demo_circuit(), Partition{2});
    // Per-path arrays of the demo circuit, in path order 00, 01, 10, 11.
    const double expect[4][16] = {
        {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, -1, -1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, 1},
    };
    for (std::uint64_t i = 0; i < 4; ++i) {
        Package up, lo;
        BlockStates s = simulate_path(program, PathId::from_index(i, program.decisions()), up, lo);
        EXPECT_LE(up.size(s.upper), 2u);
        EXPECT_LE(lo.size(s.lower), 2u);
        VectorEdge k = lo.kron(up, s.upper, s.lower);
        StateVector v = lo.extract(k, 4);
        for (int j = 0; j < 16; ++j) {
            EXPECT_NEAR(std::abs(v[j] - Complex(0.25 * expect[i][j])), 0.0, 1e-12) << i << " " << j;
        }
    }
}

TEST(SimulatePath, matches_substituted_dense_simulation) {
    RandomCircuitOptions o;
    o.num_qubits = 8;
    o.depth = 6;
    o.seed = 21;
    o.family = CircuitFamily::Mixed;
    o.cut = 4;
    o.cross_block_budget = 5;
    Circuit c = generate_random_circuit(o);
    BlockProgram program(c, Partition{4});
    const auto &decisions = program.decisions();
    ASSERT_GE(decisions.size(), 2u);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 12; ++trial) {
        PathId path = PathId::from_index(rng() % path_count(decisions), decisions);
        oracle::Vec v(256, 0.0);
        v[0] = 1.0;
        std::size_t next_decision = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (next_decision < decisions.size() && decisions[next_decision].gate_index == i) {
                const DecisionPoint &d = decisions[next_decision];
                const SchmidtTerm &t = d.terms[path.digits[next_decision]];
                oracle::apply_1q(v, d.upper_qubit, to_mat(t.upper));
                oracle::apply_1q(v, d.lower_qubit, to_mat(t.lower));
                ++next_decision;
            } else {
                oracle::apply(v, c.gates()[i]);
            }
        }
        Package up, lo;
        BlockStates s = simulate_path(program, path, up, lo);
        EXPECT_LT(oracle::max_diff(lo.extract(lo.kron(up, s.upper, s.lower), 8), v), 1e-12) << path.to_string();
    }
}

TEST(HybridDd, demo_circuit) {
    HybridOptions o;
    o.track_nodes = true;
    HybridDdResult r = run_hybrid_dd(demo_circuit(), o);
    EXPECT_LT(oracle::max_diff(r.package->extract(r.state, 4), demo_vector()), 1e-12);
    EXPECT_EQ(r.stats.decisions, 2u);
    EXPECT_EQ(r.stats.path_count, 4u);
    ASSERT_EQ(r.stats.addition_level_max_nodes.size(), 2u);
    EXPECT_EQ(r.stats.addition_level_max_nodes[0], 6u);
    EXPECT_EQ(r.stats.addition_level_max_nodes[1], 9u);
    EXPECT_EQ(r.stats.final_nodes, 9u);
    EXPECT_LE(r.stats.max_block_nodes, 2u);
    EXPECT_EQ(r.stats.max_kron_nodes, 4u);
}

TEST(HybridDd, single_path_equals_block_kron) {
    Circuit c(4);
    c.add(GateKind::H, {0}).add(GateKind::CX, {0, 1}).add(GateKind::RY, {3}, {0.4}).add(GateKind::CZ, {3, 2});
    HybridDdResult r = run_hybrid_dd(c);
    EXPECT_EQ(r.stats.path_count, 1u);
    BlockProgram program(c, Partition{2});
    Package up;
    BlockStates s = simulate_path(program, PathId{}, up, *r.package);
    EXPECT_EQ(r.package->kron(up, s.upper, s.lower), r.state);
}

TEST(HybridAmp, demo_circuit) {
    HybridAmpResult r = run_hybrid_amp(demo_circuit());
    EXPECT_LT(oracle::max_diff(r.state, demo_vector()), 1e-12);
    EXPECT_EQ(r.stats.path_count, 4u);
    EXPECT_EQ(r.stats.mode, "hybrid-amp");
}

TEST(Hybrid, engines_agree_with_oracle) {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        int n = 2 + static_cast<int>(seed % 11);
        Circuit c = mixed_circuit(n, 8, seed);
        oracle::Vec expect = oracle::simulate(c);
        HybridOptions o;
        o.workers = 1 + static_cast<int>(seed % 3);
        HybridDdResult dd = run_hybrid_dd(c, o);
        HybridAmpResult amp = run_hybrid_amp(c, o);
        EXPECT_LT(oracle::max_diff(dd.package->extract(dd.state, n), expect), 1e-9) << seed;
        EXPECT_LT(oracle::max_diff(amp.state, expect), 1e-9) << seed;
        EXPECT_NEAR(dd.package->norm(dd.state), 1.0, 1e-9);
        EXPECT_NEAR(oracle::norm(amp.state), 1.0, 1e-9);
        EXPECT_EQ(dd.stats.decisions, oracle::cross_block_count(c, n / 2));
    }
}

TEST(Hybrid, workers_order_and_reuse_do_not_change_results) {
    for (std::uint64_t seed = 3; seed <= 8; ++seed) {
        Circuit c = mixed_circuit(10, 8, seed);
        HybridOptions base;
        HybridAmpResult ref = run_hybrid_amp(c, base);
        HybridOptions many = base;
        many.workers = 4;
        HybridOptions shuffled = base;
        shuffled.reuse_prefixes = false;
        shuffled.path_order_seed = seed * 977;
        shuffled.workers = 3;
        HybridOptions low = many;
        low.low_memory = true;
        for (const HybridOptions &o : {many, shuffled, low}) {
            EXPECT_LT(max_abs_diff(run_hybrid_amp(c, o).state, ref.state), 1e-12) << seed;
        }
        HybridDdResult dd1 = run_hybrid_dd(c, base);
        HybridDdResult dd4 = run_hybrid_dd(c, many);
        EXPECT_LT(max_abs_diff(dd1.package->extract(dd1.state, 10), dd4.package->extract(dd4.state, 10)), 1e-12);
        // Importing one result into the other's package yields the same edge.
        EXPECT_EQ(dd1.package->import(*dd4.package, dd4.state), dd1.state);
    }
}

TEST(Hybrid, custom_cut) {
    Circuit c = mixed_circuit(9, 6, 2);
    for (int cut = 1; cut <= 8; ++cut) {
        HybridOptions o;
        o.cut = cut;
        HybridAmpResult r = run_hybrid_amp(c, o);
        EXPECT_EQ(r.stats.cut, cut);
        EXPECT_LT(oracle::max_diff(r.state, oracle::simulate(c)), 1e-9) << cut;
    }
}

TEST(Hybrid, gc_during_paths) {
    Circuit c = mixed_circuit(10, 10, 9);
    HybridOptions o;
    o.package.gc_threshold = 32;
    EXPECT_LT(oracle::max_diff(run_hybrid_amp(c, o).state, oracle::simulate(c)), 1e-9);
    HybridDdResult dd = run_hybrid_dd(c, o);
    EXPECT_LT(oracle::max_diff(dd.package->extract(dd.state, 10), oracle::simulate(c)), 1e-9);
}

TEST(Hybrid, capacity_and_deadline) {
    Circuit c = mixed_circuit(10, 6, 4);
    HybridOptions o;
    o.workers = 2;
    o.memory_budget = 1024;
    EXPECT_THROW(run_hybrid_amp(c, o), CapacityError);
    o.package.max_extract_qubits = 8;
    o.memory_budget = 0;
    EXPECT_THROW(run_hybrid_amp(c, o), CapacityError);
    HybridOptions late;
    late.deadline.at = Deadline::Clock::now() - std::chrono::seconds(1);
    EXPECT_THROW(run_hybrid_dd(c, late), TimeoutError);
    late.workers = 3;
    EXPECT_THROW(run_hybrid_amp(c, late), TimeoutError);
    EXPECT_THROW(run_hybrid_amp(Circuit(1)), std::invalid_argument);
}

TEST(Hybrid, stats_json) {
    HybridAmpResult r = run_hybrid_amp(demo_circuit());
    auto j = nlohmann::json::parse(r.stats.to_json());
    EXPECT_EQ(j["mode"], "hybrid-amp");
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["cut"], 2);
    EXPECT_EQ(j["decisions"], 2);
    EXPECT_EQ(j["path_count"], 4);
    EXPECT_EQ(j["workers"], 1);
    for (const char *k : {"simulate", "kron", "extract", "add"}) {
        EXPECT_TRUE(j["times"].contains(k)) << k;
    }
    EXPECT_TRUE(j["max_nodes"].contains("block"));
    EXPECT_EQ(j["paths"].size(), 4u);
}
