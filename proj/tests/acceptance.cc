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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Independent reference values come from tests/oracle.h.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracle.h"
#include "sfdd/cli.h"
#include "sfdd/dd_package.h"
#include "sfdd/dense.h"
#include "sfdd/hybrid.h"
#include "sfdd/random_circuit.h"
#include "sfdd/schrodinger.h"

using namespace sfdd;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

const double kDemo[16] = {1, 1, 1, 1, 1, -1, 1, -1, 1, 1, -1, -1, 1, -1, -1, 1};

oracle::Vec demo_vector() {
    oracle::Vec v(16);
    for (int i = 0; i < 16; ++i) {
        v[i] = 0.25 * kDemo[i];
    }
    return v;
}

/// Every hardware thread.
int hardware_workers() {
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

/// At least four, so the threaded path runs even on a single-core host.
int parallel_workers() {
    return std::max(hardware_workers(), 4);
}

/// Collects failures for one criterion.
class Check {
   public:
    void expect(bool ok, const std::string &what) {
        if (!ok && failures_.size() < 5) {
            failures_.push_back(what);
        }
        failed_ |= !ok;
    }
    bool failed() const {
        return failed_;
    }
    const std::vector<std::string> &failures() const {
        return failures_;
    }

   private:
    bool failed_ = false;
    std::vector<std::string> failures_;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

int g_failed = 0;

void report(int id, const std::string &title, const Check &check, const std::string &detail) {
    std::cout << (check.failed() ? "[FAIL]" : "[PASS]") << " criterion " << id << ": " << title << " (" << detail
              << ")" << std::endl;
    for (const std::string &f : check.failures()) {
        std::cout << "       " << f << std::endl;
    }
    g_failed += check.failed() ? 1 : 0;
}

void criterion(int id, const std::string &title, const std::function<std::string(Check &)> &body) {
    Check check;
    std::string detail;
    try {
        detail = body(check);
    } catch (const std::exception &e) {
        check.expect(false, std::string("exception: ") + e.what());
        detail = "aborted";
    }
    report(id, title, check, detail);
}

StateVector hybrid_dd_state(const Circuit &c, const HybridOptions &o = {}) {
    HybridDdResult r = run_hybrid_dd(c, o);
    return r.package->extract(r.state, c.num_qubits());
}

double dev(const StateVector &a, const oracle::Vec &b) {
    return oracle::max_diff(oracle::Vec(a.begin(), a.end()), b);
}

Circuit cz_only_circuit(std::mt19937_64 &rng, int n, int gates) {
    Circuit c(n);
    for (Qubit q = 0; q < n; ++q) {
        c.add(GateKind::H, {q});
    }
    for (int g = 0; g < gates; ++g) {
        Qubit a = static_cast<Qubit>(rng() % n);
        Qubit b = static_cast<Qubit>(rng() % (n - 1));
        if (b >= a) {
            ++b;
        }
        c.add(GateKind::CZ, {a, b});
    }
    return c;
}

/// Random vector with repeated values and zeros so that subtrees are shared.
StateVector structured_vector(std::mt19937_64 &rng, int n) {
    std::vector<Complex> pool;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::size_t pool_size = 1 + rng() % 4;
    for (std::size_t i = 0; i < pool_size; ++i) {
        pool.emplace_back(u(rng), u(rng));
    }
    StateVector v(std::size_t{1} << n);
    for (Complex &x : v) {
        std::uint64_t pick = rng() % (pool_size + 1);
        x = pick == pool_size ? Complex{} : pool[pick];
    }
    return v;
}

VectorEdge build_by_random_tree(Package &pkg, int n, const StateVector &v, std::mt19937_64 &rng) {
    std::vector<VectorEdge> terms;
    for (std::uint64_t i = 0; i < v.size(); ++i) {
        if (v[i] != Complex{}) {
            terms.push_back(pkg.scale(pkg.make_basis_state(n, i), v[i]));
        }
    }
    if (terms.empty()) {
        return Package::zero_vector();
    }
    std::shuffle(terms.begin(), terms.end(), rng);
    while (terms.size() > 1) {
        std::size_t i = rng() % (terms.size() - 1);
        terms[i] = pkg.add(terms[i], terms[i + 1]);
        terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }
    return terms.front();
}

/// Builds v bottom-up by make_vector_node, visiting sub-vectors in a random
/// order and caching nothing.
VectorEdge build_by_nodes(Package &pkg, const StateVector &v, std::size_t offset, int level, std::mt19937_64 &rng) {
    if (level < 0) {
        return pkg.scalar(v[offset]);
    }
    std::size_t half = std::size_t{1} << level;
    VectorEdge lo, hi;
    if (rng() & 1) {
        lo = build_by_nodes(pkg, v, offset, level - 1, rng);
        hi = build_by_nodes(pkg, v, offset + half, level - 1, rng);
    } else {
        hi = build_by_nodes(pkg, v, offset + half, level - 1, rng);
        lo = build_by_nodes(pkg, v, offset, level - 1, rng);
    }
    return pkg.make_vector_node(level, {lo, hi});
}

}  // namespace

int main() {
    const Circuit demo = demo_circuit();
    const oracle::Vec demo_expect = demo_vector();

    criterion(1, "demo circuit state in all three engines", [&](Check &check) {
        auto t0 = Clock::now();
        Package pkg;
        VectorEdge s = simulate(pkg, demo);
        double d_s = dev(pkg.extract(s, 4), demo_expect);
        double d_dd = dev(hybrid_dd_state(demo), demo_expect);
        double d_amp = dev(run_hybrid_amp(demo).state, demo_expect);
        double t = since(t0);
        check.expect(d_s <= 1e-12, "schrodinger deviation " + fmt(d_s));
        check.expect(d_dd <= 1e-12, "hybrid-dd deviation " + fmt(d_dd));
        check.expect(d_amp <= 1e-12, "hybrid-amp deviation " + fmt(d_amp));
        check.expect(t < 1.0, "runtime " + fmt(t) + " s");
        return "max dev " + fmt(std::max({d_s, d_dd, d_amp})) + ", " + fmt(t) + " s";
    });

    criterion(2, "amplitude of |1010> by path product and by extraction", [&](Check &check) {
        Package pkg;
        VectorEdge s = simulate(pkg, demo);
        Complex by_path = pkg.amplitude(s, "1010");
        Complex by_extract = pkg.extract(s, 4)[0b1010];
        HybridDdResult dd = run_hybrid_dd(demo);
        Complex dd_path = dd.package->amplitude(dd.state, "1010");
        Complex amp = run_hybrid_amp(demo).state[0b1010];
        double worst = 0.0;
        for (Complex a : {by_path, by_extract, dd_path, amp}) {
            worst = std::max(worst, std::abs(a - Complex{-0.25, 0.0}));
        }
        check.expect(worst <= 1e-12, "deviation from -0.25 " + fmt(worst));
        check.expect(std::abs(by_path - by_extract) <= 1e-12, "path product and extraction differ");
        std::ostringstream out, err;
        int code = run_cli({"run", SFDD_TEST_DATA "/demo.qasm", "--mode", "hybrid-amp", "--amplitudes", "1010"}, out,
                           err);
        check.expect(code == 0 && out.str() == "1010 -0.25 0.0\n", "cli printed '" + out.str() + "'");
        return "max dev " + fmt(worst);
    });

    criterion(3, "CZ splits into (P0, I) and (P1, Z)", [&](Check &check) {
        Gate cz = make_gate(GateKind::CZ, {1, 0});
        DecisionPoint d = schmidt_terms(cz, Partition{1});
        check.expect(d.terms.size() == 2, "term count " + std::to_string(d.terms.size()));
        if (d.terms.size() == 2) {
            DenseMatrix p0(2, {1, 0, 0, 0}), p1(2, {0, 0, 0, 1}), id(2, {1, 0, 0, 1}), z(2, {1, 0, 0, -1});
            check.expect(d.terms[0].upper.max_abs_diff(p0) <= 1e-12 && d.terms[0].lower.max_abs_diff(id) <= 1e-12,
                         "first term is not (P0, I)");
            check.expect(d.terms[1].upper.max_abs_diff(p1) <= 1e-12 && d.terms[1].lower.max_abs_diff(z) <= 1e-12,
                         "second term is not (P1, Z)");
        }
        DenseMatrix expect(4, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
        double r = reconstruct(d).max_abs_diff(expect);
        check.expect(r <= 1e-12, "reconstruction deviation " + fmt(r));
        return "reconstruction dev " + fmt(r);
    });

    criterion(4, "decision and path counts", [&](Check &check) {
        Classification cl = classify(demo, Partition{2});
        check.expect(cl.decisions.size() == 2, "demo decisions " + std::to_string(cl.decisions.size()));
        check.expect(path_count(cl.decisions) == 4, "demo path count");
        std::mt19937_64 rng(2024);
        int instances = 0;
        for (; instances < 150; ++instances) {
            int n = 2 + static_cast<int>(rng() % 15);
            Circuit c = cz_only_circuit(rng, n, static_cast<int>(rng() % 40));
            int cut = 1 + static_cast<int>(rng() % (n - 1));
            int cross = oracle::cross_block_count(c, cut);
            std::uint64_t paths = path_count(classify(c, Partition{cut}).decisions);
            check.expect(paths == (std::uint64_t{1} << cross),
                         "n=" + std::to_string(n) + " cut=" + std::to_string(cut) + " paths " +
                             std::to_string(paths) + " for " + std::to_string(cross) + " cross-block CZ");
        }
        return std::to_string(instances) + " CZ-only instances";
    });

    criterion(5, "per-path arrays of the demo circuit", [&](Check &check) {
        BlockProgram program(demo, Partition{2});
        const double expect[4][16] = {
            {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 0, 0, 0, 1, -1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, -1, -1, 0, 0, 0, 0},
            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, -1, 1},
        };
        oracle::Vec sum(16);
        double worst = 0.0;
        std::uint64_t count = path_count(program.decisions());
        check.expect(count == 4, "path count " + std::to_string(count));
        for (std::uint64_t p = 0; p < count && p < 4; ++p) {
            Package upper, lower;
            BlockStates s = simulate_path(program, PathId::from_index(p, program.decisions()), upper, lower);
            StateVector arr = lower.extract(lower.kron(upper, s.upper, s.lower), 4);
            oracle::Vec e(16);
            for (int i = 0; i < 16; ++i) {
                e[i] = 0.25 * expect[p][i];
                sum[i] += arr[i];
            }
            worst = std::max(worst, dev(arr, e));
        }
        double d_sum = oracle::max_diff(sum, demo_expect);
        check.expect(worst <= 1e-12, "per-path deviation " + fmt(worst));
        check.expect(d_sum <= 1e-12, "sum deviation " + fmt(d_sum));
        return "per-path dev " + fmt(worst) + ", sum dev " + fmt(d_sum);
    });

    std::vector<Circuit> suite;
    criterion(6, "engines agree with dense simulation on random circuits", [&](Check &check) {
        auto t0 = Clock::now();
        std::mt19937_64 rng(606);
        double worst = 0.0;
        for (int i = 0; i < 220; ++i) {
            RandomCircuitOptions o;
            o.num_qubits = 2 + static_cast<int>(rng() % 9);
            o.depth = 1 + static_cast<int>(rng() % 16);
            o.seed = rng();
            o.family = CircuitFamily::Mixed;
            o.two_qubit_density = 0.3 + 0.1 * static_cast<double>(rng() % 6);
            o.cut = 1 + static_cast<int>(rng() % (o.num_qubits - 1));
            o.cross_block_budget = static_cast<int>(rng() % 7);
            Circuit c = generate_random_circuit(o);
            suite.push_back(c);
            const int n = c.num_qubits();
            HybridOptions ho;
            ho.cut = o.cut;
            ho.workers = 1 + static_cast<int>(rng() % 4);
            StateVector ref = dense_simulate(c);
            oracle::Vec independent = oracle::simulate(c);
            Package pkg;
            StateVector s = pkg.extract(simulate(pkg, c), n);
            StateVector dd = hybrid_dd_state(c, ho);
            StateVector amp = run_hybrid_amp(c, ho).state;
            double d = std::max({max_abs_diff(s, ref), max_abs_diff(dd, ref), max_abs_diff(amp, ref),
                                 dev(ref, independent)});
            worst = std::max(worst, d);
            check.expect(d <= 1e-9, "circuit " + std::to_string(i) + " (n=" + std::to_string(n) +
                                        ") deviation " + fmt(d));
        }
        double t = since(t0);
        check.expect(t < 300.0, "runtime " + fmt(t) + " s");
        return std::to_string(suite.size()) + " circuits, max dev " + fmt(worst) + ", " + fmt(t) + " s";
    });

    criterion(7, "hybrid-amp result independent of worker count", [&](Check &check) {
        std::mt19937_64 rng(707);
        double worst = 0.0;
        int workers = parallel_workers();
        for (int i = 0; i < 20; ++i) {
            RandomCircuitOptions o;
            o.num_qubits = 6 + static_cast<int>(rng() % 7);
            o.depth = 4 + static_cast<int>(rng() % 10);
            o.seed = rng();
            o.family = i % 2 == 0 ? CircuitFamily::Mixed : CircuitFamily::Supremacy;
            o.cut = o.num_qubits / 2;
            o.cross_block_budget = 3 + static_cast<int>(rng() % 6);
            Circuit c = generate_random_circuit(o);
            HybridOptions one, many;
            many.workers = workers;
            StateVector a = run_hybrid_amp(c, one).state;
            StateVector b = run_hybrid_amp(c, many).state;
            double d = max_abs_diff(a, b);
            worst = std::max(worst, d);
            check.expect(d <= 1e-12, "circuit " + std::to_string(i) + " deviation " + fmt(d));
        }
        return "1 vs " + std::to_string(workers) + " workers, max dev " + fmt(worst);
    });

    criterion(8, "unit norm after every gate and for hybrid results", [&](Check &check) {
        std::vector<Circuit> circuits = suite;
        circuits.push_back(demo);
        std::size_t gates = 0;
        double worst = 0.0;
        for (const Circuit &c : circuits) {
            Package pkg;
            SimulationOptions so;
            so.observer = [&](std::size_t, VectorEdge e) {
                double d = std::abs(pkg.norm(e) - 1.0);
                worst = std::max(worst, d);
                ++gates;
            };
            simulate(pkg, c, so);
            HybridDdResult dd = run_hybrid_dd(c);
            double d_dd = std::abs(dd.package->norm(dd.state) - 1.0);
            double d_amp = std::abs(norm2(run_hybrid_amp(c).state) - 1.0);
            worst = std::max({worst, d_dd, d_amp});
        }
        check.expect(worst <= 1e-10, "norm deviation " + fmt(worst));
        return std::to_string(gates) + " gate steps over " + std::to_string(circuits.size()) +
               " circuits, max |norm - 1| " + fmt(worst);
    });

    criterion(9, "hybrid-amp no slower than schrodinger on n=16 suite", [&](Check &check) {
        int workers = hardware_workers();
        int wins = 0, total = 10;
        std::ostringstream table;
        for (int i = 0; i < total; ++i) {
            RandomCircuitOptions o;
            o.num_qubits = 16;
            o.depth = 12;
            o.seed = 9000 + static_cast<std::uint64_t>(i);
            o.cut = 8;
            o.cross_block_budget = 10;
            Circuit c = generate_random_circuit(o);
            std::size_t decisions = classify(c, Partition{8}).decisions.size();
            check.expect(decisions <= 10, "too many decisions");
            auto t0 = Clock::now();
            Package pkg;
            VectorEdge s = simulate(pkg, c);
            double t_ref = since(t0);
            HybridOptions ho;
            ho.workers = workers;
            t0 = Clock::now();
            HybridAmpResult amp = run_hybrid_amp(c, ho);
            double t_amp = since(t0);
            double d = max_abs_diff(pkg.extract(s, 16), amp.state);
            check.expect(d <= 1e-9, "instance " + std::to_string(i) + " results differ by " + fmt(d));
            wins += t_amp <= t_ref ? 1 : 0;
            table << " " << fmt(t_ref / t_amp);
        }
        check.expect(wins * 10 >= total * 7, std::to_string(wins) + "/" + std::to_string(total) + " instances");
        std::ostringstream out, err;
        int code = run_cli({"bench", "--qubits", "16", "--depth", "4", "--seeds", "1"}, out, err);
        std::string header = out.str().substr(0, out.str().find('\n'));
        check.expect(code == 0 && header == "name,decisions,t_ref,t_DD,t_ref/t_DD,t_amp,t_ref/t_amp",
                     "bench header '" + header + "'");
        return std::to_string(wins) + "/" + std::to_string(total) + " no slower with " + std::to_string(workers) +
               " workers, t_ref/t_amp" + table.str();
    });

    criterion(10, "canonical edges independent of construction order", [&](Check &check) {
        std::mt19937_64 rng(1010);
        int tests = 0;
        for (; tests < 1000; ++tests) {
            Package pkg;
            int n = 1 + static_cast<int>(rng() % 8);
            StateVector v = structured_vector(rng, n);
            VectorEdge direct = pkg.from_statevector(v);
            VectorEdge tree = build_by_random_tree(pkg, n, v, rng);
            VectorEdge nodes = build_by_nodes(pkg, v, 0, n - 1, rng);
            Complex factor = std::polar(0.5 + 0.5 * static_cast<double>(rng() % 3), 0.1 * static_cast<double>(rng() % 60));
            VectorEdge scaled = pkg.scale(pkg.from_statevector([&] {
                StateVector w = v;
                for (Complex &x : w) {
                    x *= factor;
                }
                return w;
            }()), 1.0 / factor);
            bool same = tree == direct && nodes == direct && (direct.is_zero() || scaled.node == direct.node);
            check.expect(same, "vector " + std::to_string(tests) + " on " + std::to_string(n) + " qubits");
            check.expect(max_abs_diff(pkg.extract(direct, n), v) <= 1e-12, "round trip " + std::to_string(tests));
        }
        return std::to_string(tests) + " vectors";
    });

    std::cout << (g_failed == 0 ? "all criteria passed" : std::to_string(g_failed) + " criteria failed") << std::endl;
    return g_failed == 0 ? 0 : 1;
}
