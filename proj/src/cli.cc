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

#include "sfdd/cli.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "sfdd/dense.h"
#include "sfdd/errors.h"
#include "sfdd/format.h"
#include "sfdd/hybrid.h"
#include "sfdd/qasm.h"
#include "sfdd/random_circuit.h"
#include "sfdd/schrodinger.h"

namespace sfdd {

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

int hardware_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int parse_workers(const std::string &s) {
    if (s == "max") {
        return hardware_workers();
    }
    std::size_t used = 0;
    int w = 0;
    try {
        w = std::stoi(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != s.size() || w < 1) {
        throw UsageError("--workers expects a positive integer or 'max', got '" + s + "'");
    }
    return w;
}

template <typename T>
T parse_number(const std::string &s, const char *what) {
    std::istringstream in(s);
    T v{};
    in >> v;
    if (!in || !in.eof()) {
        throw UsageError(std::string("invalid ") + what + " '" + s + "'");
    }
    return v;
}

CircuitFamily parse_family(const std::string &s) {
    if (s == "supremacy") {
        return CircuitFamily::Supremacy;
    }
    if (s == "mixed") {
        return CircuitFamily::Mixed;
    }
    throw UsageError("--family expects 'supremacy' or 'mixed'");
}

/// Flags shared by the commands that simulate one circuit.
struct Common {
    std::string input;
    std::vector<std::string> random;
    std::string family = "supremacy";
    std::string workers = "max";
    std::optional<int> cut;
    double tol = kDefaultTolerance;
    int amp_cap = 30;
    bool low_memory = false;
    double timeout = 0.0;

    void add_source(CLI::App *cmd) {
        cmd->add_option("input,--input", input, "OpenQASM 2 file");
        cmd->add_option("--random", random, "Generate a circuit instead: n depth seed density")->expected(4);
        cmd->add_option("--family", family, "Random circuit family: supremacy or mixed");
    }
    void add_engine(CLI::App *cmd) {
        cmd->add_option("--workers", workers, "Worker threads for hybrid modes, or 'max'");
        cmd->add_option("--cut", cut, "Lower block size k (default floor(n/2))");
        cmd->add_option("--tol", tol, "Complex table tolerance");
        cmd->add_option("--amp-cap", amp_cap, "Largest qubit count for amplitude arrays");
        cmd->add_flag("--low-memory", low_memory, "Single shared accumulator in hybrid-amp mode");
        cmd->add_option("--timeout", timeout, "Wall-clock limit in seconds (0 = none)");
    }

    Circuit circuit() const {
        if (input.empty() == random.empty()) {
            throw UsageError("give exactly one of an input file or --random n depth seed density");
        }
        if (!input.empty()) {
            if (!std::ifstream(input)) {
                throw UsageError("cannot read circuit file " + input);
            }
            return load_qasm_file(input);
        }
        RandomCircuitOptions o;
        o.num_qubits = parse_number<int>(random[0], "qubit count");
        o.depth = parse_number<int>(random[1], "depth");
        o.seed = parse_number<std::uint64_t>(random[2], "seed");
        o.two_qubit_density = parse_number<double>(random[3], "density");
        o.family = parse_family(family);
        if (o.num_qubits < 1 || o.num_qubits > 62 || o.depth < 0) {
            throw UsageError("random circuit needs 1..62 qubits and a non-negative depth");
        }
        return generate_random_circuit(o);
    }

    Deadline deadline() const {
        return timeout > 0 ? Deadline::after(std::chrono::duration<double>(timeout)) : Deadline{};
    }
    PackageConfig package() const {
        PackageConfig cfg;
        cfg.tolerance = tol;
        cfg.max_extract_qubits = amp_cap;
        return cfg;
    }
    HybridOptions hybrid() const {
        HybridOptions o;
        o.cut = cut;
        o.workers = parse_workers(workers);
        o.package = package();
        o.low_memory = low_memory;
        o.deadline = deadline();
        return o;
    }
};

std::string amplitude_line(std::uint64_t index, int n, Complex a) {
    return bitstring(index, n) + " " + format_real(a.real()) + " " + format_real(a.imag());
}

/// Indices selected by an --amplitudes value; empty optional means "all".
std::optional<std::vector<std::uint64_t>> amplitude_indices(const std::string &selection, int n) {
    if (selection == "all") {
        return std::nullopt;
    }
    std::vector<std::uint64_t> out;
    std::stringstream ss(selection);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.size() != static_cast<std::size_t>(n)) {
            throw UsageError("basis state '" + item + "' must have " + std::to_string(n) + " bits");
        }
        try {
            out.push_back(parse_bitstring(item));
        } catch (const std::invalid_argument &) {
            throw UsageError("basis state '" + item + "' must contain only 0 and 1");
        }
    }
    if (out.empty()) {
        throw UsageError("--amplitudes expects 'all' or a comma-separated list of bitstrings");
    }
    return out;
}

struct Outcome {
    std::string text;
    int code = kExitOk;
};

// run ------------------------------------------------------------------------

struct RunFlags {
    Common common;
    std::string mode = "schrodinger";
    std::string amplitudes;
    bool stats = false;
    std::string out;
    std::string dot;
};

std::string schrodinger_stats_json(const Circuit &c, const SimulationStats &s) {
    nlohmann::ordered_json j;
    j["mode"] = "schrodinger";
    j["n"] = c.num_qubits();
    j["gates"] = c.size();
    j["times"] = {{"simulate", s.seconds}};
    j["max_nodes"] = s.max_nodes;
    j["final_nodes"] = s.final_nodes;
    j["nodes_after_gate"] = s.nodes_after_gate;
    return j.dump(2);
}

Outcome cmd_run(const RunFlags &f) {
    parse_workers(f.common.workers);
    Circuit c = f.common.circuit();
    const int n = c.num_qubits();
    std::optional<std::optional<std::vector<std::uint64_t>>> wanted;
    if (!f.amplitudes.empty()) {
        wanted = amplitude_indices(f.amplitudes, n);
    }
    std::ostringstream text;
    auto emit_dd = [&](const Package &pkg, VectorEdge e) {
        if (!wanted) {
            return;
        }
        if (!*wanted) {
            StateVector v = pkg.extract(e, n);
            for (std::uint64_t i = 0; i < v.size(); ++i) {
                text << amplitude_line(i, n, v[i]) << "\n";
            }
        } else {
            for (std::uint64_t i : **wanted) {
                text << amplitude_line(i, n, pkg.amplitude(e, n, i)) << "\n";
            }
        }
    };
    auto write_dot = [&](const Package &pkg, VectorEdge e) {
        if (f.dot.empty()) {
            return;
        }
        std::ofstream dot(f.dot);
        if (!dot) {
            throw UsageError("cannot write " + f.dot);
        }
        pkg.write_dot(dot, e);
    };

    auto start = Clock::now();
    std::string stats_json;
    std::size_t final_nodes = 0;
    if (f.mode == "schrodinger") {
        Package pkg(f.common.package());
        SimulationOptions opts;
        opts.track_nodes = f.stats;
        opts.deadline = f.common.deadline();
        SimulationStats st;
        VectorEdge e = simulate(pkg, c, opts, &st);
        emit_dd(pkg, e);
        write_dot(pkg, e);
        stats_json = schrodinger_stats_json(c, st);
        final_nodes = st.final_nodes;
    } else if (f.mode == "hybrid-dd") {
        HybridOptions o = f.common.hybrid();
        o.track_nodes = f.stats;
        HybridDdResult r = run_hybrid_dd(c, o);
        emit_dd(*r.package, r.state);
        write_dot(*r.package, r.state);
        stats_json = r.stats.to_json();
        final_nodes = r.stats.final_nodes;
    } else if (f.mode == "hybrid-amp") {
        if (!f.dot.empty()) {
            throw UsageError("--dot needs a diagram result (schrodinger or hybrid-dd)");
        }
        HybridOptions o = f.common.hybrid();
        o.track_nodes = f.stats;
        HybridAmpResult r = run_hybrid_amp(c, o);
        if (wanted) {
            if (!*wanted) {
                for (std::uint64_t i = 0; i < r.state.size(); ++i) {
                    text << amplitude_line(i, n, r.state[i]) << "\n";
                }
            } else {
                for (std::uint64_t i : **wanted) {
                    text << amplitude_line(i, n, r.state[i]) << "\n";
                }
            }
        }
        stats_json = r.stats.to_json();
    } else {
        throw UsageError("--mode expects schrodinger, hybrid-dd or hybrid-amp");
    }
    if (f.stats) {
        text << stats_json << "\n";
    }
    if (!wanted && !f.stats) {
        text << f.mode << ": n=" << n << " gates=" << c.size();
        if (f.mode != "hybrid-amp") {
            text << " nodes=" << final_nodes;
        }
        text << " seconds=" << std::setprecision(3) << seconds_since(start) << "\n";
    }
    return Outcome{text.str(), kExitOk};
}

// verify ---------------------------------------------------------------------

struct VerifyFlags {
    Common common;
    double tol_verify = 1e-9;
    int dense_cap = 16;
};

Outcome cmd_verify(const VerifyFlags &f) {
    parse_workers(f.common.workers);
    Circuit c = f.common.circuit();
    const int n = c.num_qubits();
    if (n > f.common.amp_cap) {
        throw CapacityError("verify compares amplitude arrays and is limited to --amp-cap = " +
                            std::to_string(f.common.amp_cap) + " qubits");
    }
    std::ostringstream text;
    struct Result {
        std::string engine;
        std::optional<StateVector> state;
        std::string error;
    };
    std::vector<Result> results;
    auto attempt = [&](const std::string &name, auto &&fn) {
        Result r{name, std::nullopt, ""};
        try {
            r.state = fn();
        } catch (const TopologyError &e) {
            r.error = std::string("topology error: ") + e.what();
        } catch (const CapacityError &e) {
            r.error = std::string("capacity error: ") + e.what();
        } catch (const TimeoutError &e) {
            r.error = std::string("timeout: ") + e.what();
        }
        results.push_back(std::move(r));
    };
    if (n <= f.dense_cap) {
        attempt("dense", [&] { return dense_simulate(c, f.dense_cap); });
    }
    attempt("schrodinger", [&] {
        Package pkg(f.common.package());
        SimulationOptions opts;
        opts.deadline = f.common.deadline();
        return pkg.extract(simulate(pkg, c, opts), n);
    });
    attempt("hybrid-dd", [&] {
        HybridDdResult r = run_hybrid_dd(c, f.common.hybrid());
        return r.package->extract(r.state, n);
    });
    attempt("hybrid-amp", [&] { return run_hybrid_amp(c, f.common.hybrid()).state; });

    const Result *ref = nullptr;
    for (const Result &r : results) {
        if (r.state) {
            ref = &r;
            break;
        }
    }
    if (ref == nullptr) {
        throw CapacityError("no engine could simulate the circuit");
    }
    bool failed = false, skipped = false;
    text << "reference: " << ref->engine << "\n";
    for (const Result &r : results) {
        text << std::left << std::setw(12) << r.engine;
        if (!r.state) {
            text << r.error << "\n";
            skipped = true;
            continue;
        }
        double worst = 0.0;
        std::uint64_t worst_index = 0;
        for (std::uint64_t i = 0; i < r.state->size(); ++i) {
            double d = std::abs((*r.state)[i] - (*ref->state)[i]);
            if (d > worst) {
                worst = d;
                worst_index = i;
            }
        }
        double fidelity = std::abs(dot(*ref->state, *r.state)) / (norm2(*ref->state) * norm2(*r.state));
        bool ok = worst <= f.tol_verify;
        failed |= !ok;
        std::ostringstream dev;
        dev << std::setprecision(3) << worst;
        text << "max_dev=" << dev.str() << " fidelity=" << format_real(fidelity) << (ok ? " PASS" : " FAIL");
        if (!ok) {
            text << " worst=" << bitstring(worst_index, n);
        }
        text << "\n";
    }
    int code = failed ? kExitVerifyFailed : (skipped ? kExitCapacity : kExitOk);
    text << (failed ? "FAIL" : (skipped ? "PASS (some engines skipped)" : "PASS")) << "\n";
    return Outcome{text.str(), code};
}

// bench ----------------------------------------------------------------------

struct BenchFlags {
    std::string qubits = "16";
    int depth = 12;
    int seeds = 3;
    std::uint64_t seed = 1;
    double density = 0.5;
    int max_decisions = 10;
    std::string family = "supremacy";
    std::string workers = "max";
    std::optional<int> cut;
    double timeout = 300.0;
    double tol_verify = 1e-9;
    std::string csv;
    std::string json;
};

Outcome cmd_bench(const BenchFlags &f) {
    std::vector<int> sizes;
    {
        std::stringstream ss(f.qubits);
        std::string item;
        while (std::getline(ss, item, ',')) {
            sizes.push_back(parse_number<int>(item, "qubit count"));
        }
    }
    if (sizes.empty() || f.seeds < 1 || f.depth < 0) {
        throw UsageError("bench needs --qubits, a positive --seeds and a non-negative --depth");
    }
    const int workers = parse_workers(f.workers);
    std::ostringstream csv;
    csv << "name,decisions,t_ref,t_DD,t_ref/t_DD,t_amp,t_ref/t_amp\n";
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    bool disagree = false;

    auto fmt = [](double v) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(3) << v;
        return s.str();
    };
    for (int n : sizes) {
        for (int k = 0; k < f.seeds; ++k) {
            RandomCircuitOptions o;
            o.num_qubits = n;
            o.depth = f.depth;
            o.seed = f.seed + static_cast<std::uint64_t>(k);
            o.two_qubit_density = f.density;
            o.family = parse_family(f.family);
            o.cut = f.cut.value_or(n / 2);
            if (f.max_decisions >= 0) {
                o.cross_block_budget = f.max_decisions;
            }
            Circuit c = generate_random_circuit(o);
            std::string name = "rand_n" + std::to_string(n) + "_d" + std::to_string(f.depth) + "_s" +
                               std::to_string(o.seed);
            std::size_t decisions = classify(c, Partition{o.cut}).decisions.size();

            std::optional<double> t_ref, t_dd, t_amp;
            std::optional<StateVector> ref_state, amp_state;
            auto deadline = [&] { return Deadline::after(std::chrono::duration<double>(f.timeout)); };
            try {
                Package pkg;
                SimulationOptions so;
                so.deadline = deadline();
                auto t0 = Clock::now();
                VectorEdge e = simulate(pkg, c, so);
                t_ref = seconds_since(t0);
                if (n <= 24) {
                    ref_state = pkg.extract(e, n);
                }
            } catch (const TimeoutError &) {
            }
            HybridOptions ho;
            ho.cut = o.cut;
            ho.workers = workers;
            try {
                ho.deadline = deadline();
                auto t0 = Clock::now();
                run_hybrid_dd(c, ho);
                t_dd = seconds_since(t0);
            } catch (const TimeoutError &) {
            }
            try {
                ho.deadline = deadline();
                auto t0 = Clock::now();
                HybridAmpResult r = run_hybrid_amp(c, ho);
                t_amp = seconds_since(t0);
                amp_state = std::move(r.state);
            } catch (const TimeoutError &) {
            }
            std::optional<double> dev;
            if (ref_state && amp_state) {
                dev = max_abs_diff(*ref_state, *amp_state);
                disagree |= *dev > f.tol_verify;
            }
            auto cell = [&](const std::optional<double> &t) { return t ? fmt(*t) : std::string(">timeout"); };
            auto ratio = [&](const std::optional<double> &t) {
                if (!t_ref || !t) {
                    return std::string("-");
                }
                std::ostringstream s;
                s << std::fixed << std::setprecision(2) << *t_ref / std::max(*t, 1e-9);
                return s.str();
            };
            csv << name << "," << decisions << "," << cell(t_ref) << "," << cell(t_dd) << "," << ratio(t_dd) << ","
                << cell(t_amp) << "," << ratio(t_amp) << "\n";
            nlohmann::ordered_json row;
            row["name"] = name;
            row["n"] = n;
            row["depth"] = f.depth;
            row["seed"] = o.seed;
            row["gates"] = c.size();
            row["decisions"] = decisions;
            row["t_ref"] = t_ref ? nlohmann::ordered_json(*t_ref) : nlohmann::ordered_json(">timeout");
            row["t_DD"] = t_dd ? nlohmann::ordered_json(*t_dd) : nlohmann::ordered_json(">timeout");
            row["t_amp"] = t_amp ? nlohmann::ordered_json(*t_amp) : nlohmann::ordered_json(">timeout");
            row["workers"] = workers;
            row["max_dev"] = dev ? nlohmann::ordered_json(*dev) : nlohmann::ordered_json(nullptr);
            rows.push_back(std::move(row));
        }
    }
    auto write = [](const std::string &path, const std::string &body) {
        std::ofstream file(path);
        if (!file) {
            throw UsageError("cannot write " + path);
        }
        file << body;
    };
    std::string text;
    if (!f.csv.empty()) {
        write(f.csv, csv.str());
    } else {
        text = csv.str();
    }
    if (!f.json.empty()) {
        write(f.json, rows.dump(2) + "\n");
    }
    if (disagree) {
        text += "engine results disagree beyond " + format_real(f.tol_verify) + "\n";
    }
    return Outcome{text, disagree ? kExitVerifyFailed : kExitOk};
}

/// Expands `--config FILE` into `--key=value` arguments placed before the
/// remaining flags, so explicit flags override file entries.
std::vector<std::string> expand_config(const std::vector<std::string> &args) {
    std::vector<std::string> out;
    std::vector<std::string> rest;
    std::vector<std::string> from_file;
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string path;
        if (args[i] == "--config") {
            if (i + 1 >= args.size()) {
                throw UsageError("--config needs a file name");
            }
            path = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
            continue;
        }
        std::ifstream in(path);
        if (!in) {
            throw UsageError("cannot read config file " + path);
        }
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto trim = [](std::string s) {
                auto b = s.find_first_not_of(" \t\r");
                auto e = s.find_last_not_of(" \t\r");
                return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
            };
            line = trim(line.substr(0, line.find('#')));
            if (line.empty()) {
                continue;
            }
            auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
            }
            std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
            if (key == "random") {
                from_file.push_back("--random");
                std::istringstream vs(value);
                for (std::string v; vs >> v;) {
                    from_file.push_back(v);
                }
            } else {
                from_file.push_back("--" + key + "=" + value);
            }
        }
    }
    if (rest.empty()) {
        return from_file;
    }
    out.push_back(rest.front());  // subcommand name
    out.insert(out.end(), from_file.begin(), from_file.end());
    out.insert(out.end(), rest.begin() + 1, rest.end());
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string> &raw_args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Hybrid Schrodinger-Feynman simulation with decision diagrams", "sfdd"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    RunFlags run;
    CLI::App *run_cmd = app.add_subcommand("run", "Simulate a circuit with one engine");
    run.common.add_source(run_cmd);
    run.common.add_engine(run_cmd);
    run_cmd->add_option("--mode", run.mode, "schrodinger, hybrid-dd or hybrid-amp");
    run_cmd->add_option("--amplitudes", run.amplitudes, "'all' or comma-separated bitstrings (q_{n-1}...q_0)");
    run_cmd->add_flag("--stats", run.stats, "Print the statistics record as JSON");
    run_cmd->add_option("--out", run.out, "Write output to a file instead of stdout");
    run_cmd->add_option("--dot", run.dot, "Write the final diagram in Graphviz format");

    VerifyFlags verify;
    CLI::App *verify_cmd = app.add_subcommand("verify", "Cross-check every engine and the dense oracle");
    verify.common.add_source(verify_cmd);
    verify.common.add_engine(verify_cmd);
    verify_cmd->add_option("--tol-verify", verify.tol_verify, "Largest allowed elementwise deviation");
    verify_cmd->add_option("--dense-cap", verify.dense_cap, "Largest qubit count for the dense oracle");

    BenchFlags bench;
    CLI::App *bench_cmd = app.add_subcommand("bench", "Time the engines on generated circuits");
    bench_cmd->add_option("--qubits", bench.qubits, "Comma-separated qubit counts");
    bench_cmd->add_option("--depth", bench.depth, "Layers per circuit");
    bench_cmd->add_option("--seeds", bench.seeds, "Circuits per qubit count");
    bench_cmd->add_option("--seed", bench.seed, "First seed");
    bench_cmd->add_option("--density", bench.density, "Two-qubit gate density per layer");
    bench_cmd->add_option("--max-decisions", bench.max_decisions, "Cross-block gate budget (-1 = unlimited)");
    bench_cmd->add_option("--family", bench.family, "supremacy or mixed");
    bench_cmd->add_option("--workers", bench.workers, "Hybrid worker threads, or 'max'");
    bench_cmd->add_option("--cut", bench.cut, "Lower block size");
    bench_cmd->add_option("--timeout", bench.timeout, "Per-engine limit in seconds");
    bench_cmd->add_option("--tol-verify", bench.tol_verify, "Allowed deviation between engines");
    bench_cmd->add_option("--csv", bench.csv, "CSV report file (default stdout)");
    bench_cmd->add_option("--json", bench.json, "JSON report file");

    Outcome outcome;
    try {
        std::vector<std::string> args = expand_config(raw_args);
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        try {
            app.parse(reversed);
        } catch (const CLI::ParseError &e) {
            int code = app.exit(e, out, err);
            return code == 0 ? kExitOk : kExitUsage;
        }
        if (run_cmd->parsed()) {
            outcome = cmd_run(run);
        } else if (verify_cmd->parsed()) {
            outcome = cmd_verify(verify);
        } else {
            outcome = cmd_bench(bench);
        }
        if (run_cmd->parsed() && !run.out.empty()) {
            std::ofstream file(run.out);
            if (!file) {
                throw UsageError("cannot write " + run.out);
            }
            file << outcome.text;
        } else {
            out << outcome.text;
        }
        return outcome.code;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const TopologyError &e) {
        err << "topology error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const CapacityError &e) {
        err << "capacity error: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const TimeoutError &e) {
        err << "timeout: " << e.what() << "\n";
        return kExitCapacity;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace sfdd
