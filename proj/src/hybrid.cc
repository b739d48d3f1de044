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

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "sfdd/schrodinger.h"

namespace sfdd {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
    return std::chrono::duration<double>(Clock::now() - t).count();
}

DenseMatrix swap_matrix() {
    return gate_matrix(GateKind::SWAP, {});
}

DenseMatrix outer(std::size_t i, std::size_t j) {
    DenseMatrix m(2);
    m(i, j) = 1.0;
    return m;
}

/// Visits 0..total-1 either in order or through an affine permutation.
class PathOrder {
   public:
    PathOrder(std::uint64_t total, std::optional<std::uint64_t> seed) : total_(total) {
        if (!seed.has_value() || total < 2) {
            return;
        }
        stride_ = (*seed | 1) % total;
        while (stride_ == 0 || std::gcd(stride_, total) != 1) {
            stride_ = (stride_ + 1) % total;
        }
        offset_ = (*seed >> 17) % total;
    }
    std::uint64_t operator()(std::uint64_t k) const {
        unsigned __int128 v = static_cast<unsigned __int128>(k) * stride_ + offset_;
        return static_cast<std::uint64_t>(v % total_);
    }

   private:
    std::uint64_t total_;
    std::uint64_t stride_ = 1;
    std::uint64_t offset_ = 0;
};

/// One worker's private packages, prebuilt operation diagrams and the
/// per-block state after each segment of the last path.
class PathWorker {
   public:
    PathWorker(const BlockProgram &program, const HybridOptions &options)
        : program_(program),
          options_(options),
          upper_pkg_(options.package),
          lower_pkg_(options.package),
          checkpoints_{std::vector<VectorEdge>(program.decisions().size() + 1),
                       std::vector<VectorEdge>(program.decisions().size() + 1)} {
        for (int b = 0; b < 2; ++b) {
            bool upper = b == 1;
            Package &pkg = package(upper);
            int nq = program.block_qubits(upper);
            for (const auto &segment : program.segments(upper)) {
                std::vector<MatrixEdge> dds;
                for (const Operation &op : segment) {
                    dds.push_back(build_operation_dd(pkg, nq, op));
                    pkg.pin(dds.back());
                }
                segment_dds_[b].push_back(std::move(dds));
            }
            for (std::size_t j = 0; j < program.decisions().size(); ++j) {
                std::vector<MatrixEdge> dds;
                for (std::size_t t = 0; t < program.decisions()[j].terms.size(); ++t) {
                    dds.push_back(build_operation_dd(pkg, nq, program.factor(upper, j, t)));
                    pkg.pin(dds.back());
                }
                factor_dds_[b].push_back(std::move(dds));
            }
        }
    }

    Package &package(bool upper) {
        return upper ? upper_pkg_ : lower_pkg_;
    }

    /// Brings both block states up to date for `path`; returns false when
    /// either block vanished.
    bool advance(const PathId &path, PathStats &ps) {
        const std::size_t d = path.digits.size();
        std::size_t first = 0;  // first segment to recompute
        if (options_.reuse_prefixes && valid_) {
            while (first < d && path.digits[first] == last_.digits[first]) {
                ++first;
            }
            first = first == d ? d + 1 : first + 1;
        }
        for (int b = 0; b < 2; ++b) {
            run_block(b, path, first, ps);
        }
        last_ = path;
        valid_ = true;
        ps.max_nodes = std::max({ps.max_nodes, upper_pkg_.size(upper()), lower_pkg_.size(lower())});
        return !upper().is_zero() && !lower().is_zero();
    }

    VectorEdge upper() const {
        return checkpoints_[1].back();
    }
    VectorEdge lower() const {
        return checkpoints_[0].back();
    }

    /// Runs gc on either package when due, keeping checkpoints and `extra`.
    void collect(std::span<const VectorEdge> extra_lower) {
        if (upper_pkg_.gc_due()) {
            upper_pkg_.gc(checkpoints_[1]);
        }
        if (lower_pkg_.gc_due()) {
            std::vector<VectorEdge> roots = checkpoints_[0];
            roots.insert(roots.end(), extra_lower.begin(), extra_lower.end());
            lower_pkg_.gc(roots);
        }
    }

   private:
    void run_block(int b, const PathId &path, std::size_t first, PathStats &ps) {
        bool upper = b == 1;
        Package &pkg = package(upper);
        std::vector<VectorEdge> &states = checkpoints_[b];
        for (std::size_t j = first; j < states.size(); ++j) {
            options_.deadline.check();
            VectorEdge s;
            if (j == 0) {
                s = pkg.make_basis_state(program_.block_qubits(upper), std::uint64_t{0});
            } else {
                s = states[j - 1];
                if (!s.is_zero()) {
                    s = apply(pkg, factor_dds_[b][j - 1][path.digits[j - 1]], s, ps);
                }
            }
            for (MatrixEdge m : segment_dds_[b][j]) {
                if (s.is_zero()) {
                    break;
                }
                s = apply(pkg, m, s, ps);
            }
            states[j] = s;
        }
    }

    VectorEdge apply(Package &pkg, MatrixEdge m, VectorEdge s, PathStats &ps) {
        s = pkg.multiply(m, s);
        if (options_.track_nodes) {
            ps.max_nodes = std::max(ps.max_nodes, pkg.size(s));
        }
        return s;
    }

    const BlockProgram &program_;
    const HybridOptions &options_;
    Package upper_pkg_;
    Package lower_pkg_;
    std::vector<VectorEdge> checkpoints_[2];  // [0] lower, [1] upper
    std::vector<std::vector<MatrixEdge>> segment_dds_[2];
    std::vector<std::vector<MatrixEdge>> factor_dds_[2];
    PathId last_;
    bool valid_ = false;
};

struct WorkerTimes {
    double simulate = 0.0;
    double kron = 0.0;
    double extract = 0.0;
    double add = 0.0;
    std::uint64_t zero_paths = 0;
    std::size_t max_block_nodes = 0;
    std::size_t max_kron_nodes = 0;
};

/// Shared driver: dispatches runs of path indices from an atomic counter and hands
/// each live path to `consume`. Workers stay alive for the final reduction.
template <typename WorkerState, typename Consume>
void dispatch(const BlockProgram &program, const HybridOptions &options, std::vector<std::unique_ptr<PathWorker>> &pool,
              std::vector<WorkerState> &states, HybridStats &stats, Consume consume) {
    const int workers = stats.workers;
    const std::uint64_t total = stats.path_count;
    PathOrder order(total, options.path_order_seed);
    // Consecutive indices share the longest prefixes, so workers claim runs
    // of them; about 16 runs per worker keeps the load balanced.
    const std::uint64_t chunk = std::max<std::uint64_t>(1, total / (16 * static_cast<std::uint64_t>(workers)));
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    pool.resize(static_cast<std::size_t>(workers));
    states.resize(static_cast<std::size_t>(workers));
    std::vector<WorkerTimes> times(static_cast<std::size_t>(workers));
    stats.paths.assign(static_cast<std::size_t>(total), PathStats{});

    auto body = [&](int w) {
        try {
            pool[static_cast<std::size_t>(w)] = std::make_unique<PathWorker>(program, options);
            PathWorker &worker = *pool[static_cast<std::size_t>(w)];
            WorkerState &state = states[static_cast<std::size_t>(w)];
            WorkerTimes &t = times[static_cast<std::size_t>(w)];
            std::uint64_t k = total, end = total;
            while (!stop.load(std::memory_order_relaxed)) {
                if (k == end) {
                    k = next.fetch_add(chunk, std::memory_order_relaxed);
                    if (k >= total) {
                        break;
                    }
                    end = std::min(total, k + chunk);
                }
                std::uint64_t index = order(k++);
                PathStats &ps = stats.paths[static_cast<std::size_t>(index)];
                ps.index = index;
                auto start = Clock::now();
                bool live = worker.advance(PathId::from_index(index, program.decisions()), ps);
                t.simulate += seconds_since(start);
                t.max_block_nodes = std::max(t.max_block_nodes, ps.max_nodes);
                if (live) {
                    consume(state, worker, t);
                } else {
                    ps.skipped = true;
                    ++t.zero_paths;
                }
                ps.seconds = seconds_since(start);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
            stop.store(true);
        }
    };

    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) {
            threads.emplace_back(body, w);
        }
        for (std::thread &th : threads) {
            th.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    for (const WorkerTimes &t : times) {
        stats.t_simulate += t.simulate;
        stats.t_kron += t.kron;
        stats.t_extract += t.extract;
        stats.t_add += t.add;
        stats.zero_paths += t.zero_paths;
        stats.max_block_nodes = std::max(stats.max_block_nodes, t.max_block_nodes);
        stats.max_kron_nodes = std::max(stats.max_kron_nodes, t.max_kron_nodes);
    }
}

HybridStats initial_stats(const char *mode, const BlockProgram &program, int workers) {
    HybridStats s;
    s.mode = mode;
    s.n = program.num_qubits();
    s.cut = program.partition().cut;
    s.decisions = program.decisions().size();
    s.path_count = path_count(program.decisions());
    s.workers = workers;
    return s;
}

int effective_workers(const HybridOptions &options, std::uint64_t paths) {
    if (options.workers < 1) {
        throw std::invalid_argument("worker count must be positive");
    }
    return static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(options.workers), paths));
}

Partition resolve_partition(const Circuit &c, const HybridOptions &options) {
    Partition p = options.cut.has_value() ? Partition{*options.cut} : Partition::halves(c.num_qubits());
    p.validate(c.num_qubits());
    return p;
}

}  // namespace

void Partition::validate(int n) const {
    if (n < 2) {
        throw std::invalid_argument("hybrid simulation needs at least two qubits");
    }
    if (cut < 1 || cut > n - 1) {
        throw std::invalid_argument("cut must be between 1 and " + std::to_string(n - 1));
    }
}

DecisionPoint schmidt_terms(const Gate &g, const Partition &p, std::size_t gate_index) {
    std::vector<Qubit> ops = g.operands();
    if (ops.size() != 2 || p.is_upper(ops[0]) == p.is_upper(ops[1])) {
        throw std::invalid_argument("schmidt_terms needs a two-qubit gate across the cut");
    }
    DenseMatrix m = gate_matrix(g);
    DecisionPoint d;
    d.gate_index = gate_index;
    if (p.is_upper(ops[0])) {
        d.upper_qubit = ops[0];
        d.lower_qubit = ops[1];
    } else {
        d.upper_qubit = ops[1];
        d.lower_qubit = ops[0];
        DenseMatrix s = swap_matrix();
        m = s * m * s;
    }
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            DenseMatrix block(2);
            for (std::size_t r = 0; r < 2; ++r) {
                for (std::size_t c = 0; c < 2; ++c) {
                    block(r, c) = m(2 * i + r, 2 * j + c);
                }
            }
            if (!block.is_zero(0.0)) {
                d.terms.push_back(SchmidtTerm{outer(i, j), block});
            }
        }
    }
    return d;
}

DenseMatrix reconstruct(const DecisionPoint &d) {
    DenseMatrix sum(4);
    for (const SchmidtTerm &t : d.terms) {
        sum = sum + t.upper.kron(t.lower);
    }
    return sum;
}

Classification classify(const Circuit &c, const Partition &p) {
    p.validate(c.num_qubits());
    Classification out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Gate &g = c.gates()[i];
        std::vector<Qubit> ops = g.operands();
        std::size_t up = static_cast<std::size_t>(std::count_if(ops.begin(), ops.end(), [&](Qubit q) { return p.is_upper(q); }));
        if (up == ops.size()) {
            out.upper_gates.push_back(i);
        } else if (up == 0) {
            out.lower_gates.push_back(i);
        } else if (ops.size() > 2) {
            throw TopologyError("gate " + std::to_string(i) + " ('" + std::string(gate_info(g.kind).name) + "') acts on " +
                                    std::to_string(ops.size()) +
                                    " qubits across the cut; only two-qubit gates can be split",
                                i);
        } else {
            out.decisions.push_back(schmidt_terms(g, p, i));
        }
    }
    return out;
}

std::uint64_t path_count(const std::vector<DecisionPoint> &decisions) {
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
    std::uint64_t count = 1;
    for (const DecisionPoint &d : decisions) {
        if (count > kLimit / d.terms.size()) {
            throw CapacityError("path count exceeds 2^62");
        }
        count *= d.terms.size();
    }
    return count;
}

PathId PathId::from_index(std::uint64_t index, const std::vector<DecisionPoint> &decisions) {
    PathId p;
    p.digits.resize(decisions.size());
    for (std::size_t j = decisions.size(); j-- > 0;) {
        std::uint64_t radix = decisions[j].terms.size();
        p.digits[j] = static_cast<std::uint8_t>(index % radix);
        index /= radix;
    }
    if (index != 0) {
        throw std::out_of_range("path index out of range");
    }
    return p;
}

std::uint64_t PathId::index(const std::vector<DecisionPoint> &decisions) const {
    if (digits.size() != decisions.size()) {
        throw std::invalid_argument("path length does not match the decision count");
    }
    std::uint64_t v = 0;
    for (std::size_t j = 0; j < digits.size(); ++j) {
        if (digits[j] >= decisions[j].terms.size()) {
            throw std::out_of_range("path digit out of range");
        }
        v = v * decisions[j].terms.size() + digits[j];
    }
    return v;
}

std::string PathId::to_string() const {
    std::string s;
    for (std::uint8_t d : digits) {
        s += static_cast<char>('0' + d);
    }
    return s;
}

BlockProgram::BlockProgram(const Circuit &c, const Partition &p)
    : n_(c.num_qubits()), partition_(p), classification_(classify(c, p)) {
    lower_segments_.resize(classification_.decisions.size() + 1);
    upper_segments_.resize(classification_.decisions.size() + 1);
    std::size_t segment = 0;
    auto lower_it = classification_.lower_gates.begin();
    auto upper_it = classification_.upper_gates.begin();
    auto relabel = [](Operation op, int offset) {
        for (Qubit &q : op.controls) {
            q -= offset;
        }
        for (Qubit &q : op.targets) {
            q -= offset;
        }
        return op;
    };
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (lower_it != classification_.lower_gates.end() && *lower_it == i) {
            lower_segments_[segment].push_back(to_operation(c.gates()[i]));
            ++lower_it;
        } else if (upper_it != classification_.upper_gates.end() && *upper_it == i) {
            upper_segments_[segment].push_back(relabel(to_operation(c.gates()[i]), p.cut));
            ++upper_it;
        } else {
            ++segment;
        }
    }
}

Operation BlockProgram::factor(bool upper, std::size_t j, std::size_t t) const {
    const DecisionPoint &d = classification_.decisions.at(j);
    const SchmidtTerm &term = d.terms.at(t);
    Operation op;
    if (upper) {
        op.targets = {d.upper_qubit - partition_.cut};
        op.matrix = term.upper;
    } else {
        op.targets = {d.lower_qubit};
        op.matrix = term.lower;
    }
    return op;
}

BlockStates simulate_path(const BlockProgram &program, const PathId &path, Package &pkg_upper, Package &pkg_lower) {
    path.index(program.decisions());  // validates the digits
    BlockStates out;
    for (int b = 0; b < 2; ++b) {
        bool upper = b == 1;
        Package &pkg = upper ? pkg_upper : pkg_lower;
        int nq = program.block_qubits(upper);
        VectorEdge s = pkg.make_basis_state(nq, std::uint64_t{0});
        const auto &segments = program.segments(upper);
        for (std::size_t j = 0; j < segments.size(); ++j) {
            if (j > 0) {
                s = pkg.multiply(build_operation_dd(pkg, nq, program.factor(upper, j - 1, path.digits[j - 1])), s);
            }
            for (const Operation &op : segments[j]) {
                s = pkg.multiply(build_operation_dd(pkg, nq, op), s);
            }
        }
        (upper ? out.upper : out.lower) = s;
    }
    return out;
}

std::size_t physical_memory_bytes() {
    long pages = sysconf(_SC_PHYS_PAGES);
    long page_size = sysconf(_SC_PAGE_SIZE);
    if (pages <= 0 || page_size <= 0) {
        return 0;
    }
    return static_cast<std::size_t>(pages) * static_cast<std::size_t>(page_size);
}

HybridDdResult run_hybrid_dd(const Circuit &c, const HybridOptions &options) {
    auto start = Clock::now();
    BlockProgram program(c, resolve_partition(c, options));
    HybridDdResult result;
    result.stats = initial_stats("hybrid-dd", program, effective_workers(options, path_count(program.decisions())));
    HybridStats &stats = result.stats;

    // Binary counter of partial sums: slot L holds the sum of 2^L paths.
    struct Counter {
        std::vector<std::optional<VectorEdge>> slots;
        std::vector<std::size_t> level_max;
    };
    auto record = [](std::vector<std::size_t> &level_max, std::size_t level, std::size_t nodes) {
        if (level_max.size() <= level) {
            level_max.resize(level + 1, 0);
        }
        level_max[level] = std::max(level_max[level], nodes);
    };
    std::vector<std::unique_ptr<PathWorker>> pool;
    std::vector<Counter> counters;
    dispatch(program, options, pool, counters, stats, [&](Counter &s, PathWorker &w, WorkerTimes &t) {
        Package &pkg = w.package(false);
        auto t0 = Clock::now();
        VectorEdge r = pkg.kron(w.package(true), w.upper(), w.lower());
        t.kron += seconds_since(t0);
        t.max_kron_nodes = std::max(t.max_kron_nodes, pkg.size(r));
        t0 = Clock::now();
        for (std::size_t level = 0;; ++level) {
            if (s.slots.size() <= level) {
                s.slots.resize(level + 1);
            }
            if (!s.slots[level].has_value()) {
                s.slots[level] = r;
                break;
            }
            r = pkg.add(*s.slots[level], r);
            s.slots[level].reset();
            record(s.level_max, level, pkg.size(r));
        }
        t.add += seconds_since(t0);
        std::vector<VectorEdge> roots;
        for (const auto &slot : s.slots) {
            if (slot.has_value()) {
                roots.push_back(*slot);
            }
        }
        w.collect(roots);
    });

    // Leftover slots of every worker, lowest level first, are imported into
    // the result package and summed pairwise.
    auto t0 = Clock::now();
    result.package = std::make_unique<Package>(options.package);
    Package &main = *result.package;
    std::vector<VectorEdge> pending;
    for (std::size_t w = 0; w < pool.size(); ++w) {
        for (const auto &slot : counters[w].slots) {
            if (slot.has_value()) {
                pending.push_back(main.import(pool[w]->package(false), *slot));
            }
        }
        for (std::size_t l = 0; l < counters[w].level_max.size(); ++l) {
            record(stats.addition_level_max_nodes, l, counters[w].level_max[l]);
        }
        pool[w].reset();
    }
    while (pending.size() > 1) {
        std::vector<VectorEdge> next;
        for (std::size_t i = 0; i + 1 < pending.size(); i += 2) {
            next.push_back(main.add(pending[i], pending[i + 1]));
        }
        if (pending.size() % 2 == 1) {
            next.push_back(pending.back());
        }
        pending = std::move(next);
    }
    result.state = pending.empty() ? Package::zero_vector() : pending.front();
    stats.t_add += seconds_since(t0);
    stats.final_nodes = main.size(result.state);
    stats.t_total = seconds_since(start);
    return result;
}

HybridAmpResult run_hybrid_amp(const Circuit &c, const HybridOptions &options) {
    auto start = Clock::now();
    BlockProgram program(c, resolve_partition(c, options));
    const int n = c.num_qubits();
    if (n > options.package.max_extract_qubits) {
        throw CapacityError("amplitude mode limited to " + std::to_string(options.package.max_extract_qubits) +
                            " qubits");
    }
    HybridAmpResult result;
    result.stats = initial_stats("hybrid-amp", program, effective_workers(options, path_count(program.decisions())));
    HybridStats &stats = result.stats;
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t accumulators = options.low_memory ? 1 : static_cast<std::size_t>(stats.workers);
    const std::size_t budget = options.memory_budget != 0 ? options.memory_budget : physical_memory_bytes() / 2;
    const double needed = static_cast<double>(accumulators) * static_cast<double>(dim) * sizeof(Complex);
    if (budget != 0 && needed > static_cast<double>(budget)) {
        throw CapacityError("amplitude accumulators need " + std::to_string(static_cast<std::uint64_t>(needed)) +
                            " bytes but the budget is " + std::to_string(budget) +
                            "; use fewer workers or the low-memory mode");
    }

    struct Accumulator {
        StateVector data;
    };
    StateVector shared;
    std::mutex shared_mutex;
    if (options.low_memory) {
        shared.assign(dim, 0.0);
    }
    std::vector<std::unique_ptr<PathWorker>> pool;
    std::vector<Accumulator> accs;
    dispatch(program, options, pool, accs, stats, [&](Accumulator &a, PathWorker &w, WorkerTimes &t) {
        Package &pkg = w.package(false);
        auto t0 = Clock::now();
        VectorEdge r = pkg.kron(w.package(true), w.upper(), w.lower());
        t.kron += seconds_since(t0);
        t.max_kron_nodes = std::max(t.max_kron_nodes, pkg.size(r));
        t0 = Clock::now();
        if (options.low_memory) {
            std::lock_guard<std::mutex> lock(shared_mutex);
            pkg.accumulate(r, n, shared);
        } else {
            if (a.data.empty()) {
                a.data.assign(dim, 0.0);
            }
            pkg.accumulate(r, n, a.data);
        }
        t.extract += seconds_since(t0);
        w.collect({});
    });
    pool.clear();

    auto t0 = Clock::now();
    if (options.low_memory) {
        result.state = std::move(shared);
    } else {
        // Pairwise reduction over the workers' accumulators.
        std::vector<StateVector *> live;
        for (Accumulator &a : accs) {
            if (!a.data.empty()) {
                live.push_back(&a.data);
            }
        }
        for (std::size_t stride = 1; stride < live.size(); stride *= 2) {
            for (std::size_t i = 0; i + stride < live.size(); i += 2 * stride) {
                StateVector &dst = *live[i];
                const StateVector &src = *live[i + stride];
                for (std::size_t k = 0; k < dim; ++k) {
                    dst[k] += src[k];
                }
            }
        }
        result.state = live.empty() ? StateVector(dim, 0.0) : std::move(*live.front());
    }
    stats.t_add += seconds_since(t0);
    stats.t_total = seconds_since(start);
    return result;
}

std::string HybridStats::to_json() const {
    nlohmann::ordered_json j;
    j["mode"] = mode;
    j["n"] = n;
    j["cut"] = cut;
    j["decisions"] = decisions;
    j["path_count"] = path_count;
    j["zero_paths"] = zero_paths;
    j["workers"] = workers;
    j["times"] = {{"simulate", t_simulate}, {"kron", t_kron}, {"extract", t_extract}, {"add", t_add},
                  {"total", t_total}};
    j["max_nodes"] = {{"block", max_block_nodes}, {"kron", max_kron_nodes}, {"final", final_nodes}};
    j["addition_level_max_nodes"] = addition_level_max_nodes;
    if (paths.size() <= 4096) {
        nlohmann::ordered_json list = nlohmann::ordered_json::array();
        for (const PathStats &p : paths) {
            list.push_back({{"index", p.index}, {"max_nodes", p.max_nodes}, {"skipped", p.skipped},
                            {"seconds", p.seconds}});
        }
        j["paths"] = std::move(list);
    }
    return j.dump(2);
}

}  // namespace sfdd
