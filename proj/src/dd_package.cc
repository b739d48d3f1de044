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

#include "sfdd/dd_package.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "sfdd/errors.h"
#include "sfdd/format.h"

namespace sfdd {

namespace {

constexpr std::int32_t kDeadLevel = -2;
constexpr std::size_t kInitialBuckets = 1 << 12;

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
}

inline std::uint64_t finish(std::uint64_t x) {
    x ^= x >> 31;
    x *= 0x7fb5d329728ea185ULL;
    x ^= x >> 27;
    x *= 0x81dadef4bc2dd44dULL;
    x ^= x >> 33;
    return x;
}

inline std::uint64_t edge_bits(NodeId node, ComplexRef w) {
    return (static_cast<std::uint64_t>(node) << 32) | w.id;
}

std::uint64_t hash_node(const VectorNode &n) {
    std::uint64_t h = static_cast<std::uint64_t>(n.level);
    for (const VectorEdge &e : n.succ) {
        h = mix(h, edge_bits(e.node, e.weight));
    }
    return finish(h);
}

std::uint64_t hash_node(const MatrixNode &n) {
    std::uint64_t h = static_cast<std::uint64_t>(n.level) ^ 0xABCDEF;
    for (const MatrixEdge &e : n.succ) {
        h = mix(h, edge_bits(e.node, e.weight));
    }
    return finish(h);
}

int checked_qubits(int n) {
    if (n <= 0 || n > 62) {
        throw std::invalid_argument("qubit count must be between 1 and 62, got " + std::to_string(n));
    }
    return n;
}

std::string weight_label(Complex w) {
    return format_real(w.real()) + "," + format_real(w.imag());
}

}  // namespace

std::size_t Package::AddKeyHash::operator()(const AddKey &k) const {
    return static_cast<std::size_t>(finish(mix(edge_bits(k.a.node, k.a.weight), edge_bits(k.b.node, k.b.weight))));
}

std::size_t Package::NodePairKeyHash::operator()(const NodePairKey &k) const {
    return static_cast<std::size_t>(finish((static_cast<std::uint64_t>(k.a) << 32) | k.b));
}

Package::Package(PackageConfig config)
    : config_(config),
      complex_(config.tolerance),
      add_cache_(config.cache_bits),
      multiply_cache_(config.cache_bits),
      inner_cache_(config.cache_bits - 2 > 4 ? config.cache_bits - 2 : 4),
      gc_threshold_(config.gc_threshold) {
    // Slot 0 of each pool is the terminal.
    vnodes_.push_back(VectorNode{});
    mnodes_.push_back(MatrixNode{});
    vheads_.assign(kInitialBuckets, kTerminal);
    mheads_.assign(kInitialBuckets, kTerminal);
}

// Construction ----------------------------------------------------------------

VectorEdge Package::scalar(Complex w) {
    return edge(kTerminal, complex_.lookup(w));
}

MatrixEdge Package::matrix_scalar(Complex w) {
    ComplexRef r = complex_.lookup(w);
    return r == kZeroRef ? MatrixEdge{} : MatrixEdge{kTerminal, r};
}

NodeId Package::find_or_insert(const VectorNode &n) {
    std::size_t slot = hash_node(n) & (vheads_.size() - 1);
    for (NodeId id = vheads_[slot]; id != kTerminal; id = vnodes_[id].next) {
        const VectorNode &c = vnodes_[id];
        if (c.level == n.level && c.succ == n.succ) {
            return id;
        }
    }
    NodeId id;
    if (!vfree_.empty()) {
        id = vfree_.back();
        vfree_.pop_back();
        vnodes_[id] = n;
    } else {
        id = static_cast<NodeId>(vnodes_.size());
        vnodes_.push_back(n);
    }
    vnodes_[id].next = vheads_[slot];
    vheads_[slot] = id;
    if (live_vector_nodes() > vheads_.size()) {
        rehash_vectors(vheads_.size() * 2);
    }
    return id;
}

NodeId Package::find_or_insert(const MatrixNode &n) {
    std::size_t slot = hash_node(n) & (mheads_.size() - 1);
    for (NodeId id = mheads_[slot]; id != kTerminal; id = mnodes_[id].next) {
        const MatrixNode &c = mnodes_[id];
        if (c.level == n.level && c.succ == n.succ) {
            return id;
        }
    }
    NodeId id;
    if (!mfree_.empty()) {
        id = mfree_.back();
        mfree_.pop_back();
        mnodes_[id] = n;
    } else {
        id = static_cast<NodeId>(mnodes_.size());
        mnodes_.push_back(n);
    }
    mnodes_[id].next = mheads_[slot];
    mheads_[slot] = id;
    if (live_matrix_nodes() > mheads_.size()) {
        rehash_matrices(mheads_.size() * 2);
    }
    return id;
}

void Package::rehash_vectors(std::size_t buckets) {
    vheads_.assign(buckets, kTerminal);
    for (NodeId id = 1; id < vnodes_.size(); ++id) {
        VectorNode &n = vnodes_[id];
        if (n.level == kDeadLevel) {
            continue;
        }
        std::size_t slot = hash_node(n) & (buckets - 1);
        n.next = vheads_[slot];
        vheads_[slot] = id;
    }
}

void Package::rehash_matrices(std::size_t buckets) {
    mheads_.assign(buckets, kTerminal);
    for (NodeId id = 1; id < mnodes_.size(); ++id) {
        MatrixNode &n = mnodes_[id];
        if (n.level == kDeadLevel) {
            continue;
        }
        std::size_t slot = hash_node(n) & (buckets - 1);
        n.next = mheads_[slot];
        mheads_[slot] = id;
    }
}

/// Index of the normalization pivot: the leftmost successor whose magnitude
/// is within tolerance of the largest one, or -1 for an all-zero node. Zero
/// successors are redirected to the terminal on the way.
template <std::size_t N, typename Edge>
int Package::pivot(std::array<Edge, N> &succ) const {
    double max_mag = 0.0;
    for (Edge &e : succ) {
        if (e.is_zero()) {
            e.node = kTerminal;
        } else {
            max_mag = std::max(max_mag, std::abs(complex_.value(e.weight)));
        }
    }
    for (std::size_t i = 0; i < N; ++i) {
        if (!succ[i].is_zero() && std::abs(complex_.value(succ[i].weight)) + complex_.tolerance() >= max_mag) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

VectorEdge Package::make_vector_node(int level, std::array<VectorEdge, 2> succ) {
    if (level < 0) {
        throw std::invalid_argument("vector node level must be non-negative");
    }
    int lead = pivot(succ);
    if (lead < 0) {
        return {};
    }
    ComplexRef factor = succ[lead].weight;
    if (factor != kOneRef) {
        for (VectorEdge &s : succ) {
            if (!s.is_zero()) {
                s.weight = complex_.div(s.weight, factor);
                if (s.is_zero()) {
                    s.node = kTerminal;
                }
            }
        }
    }
    VectorNode n;
    n.succ = succ;
    n.level = level;
    return {find_or_insert(n), factor};
}

MatrixEdge Package::make_matrix_node(int level, std::array<MatrixEdge, 4> succ) {
    if (level < 0) {
        throw std::invalid_argument("matrix node level must be non-negative");
    }
    int lead = pivot(succ);
    if (lead < 0) {
        return {};
    }
    ComplexRef factor = succ[lead].weight;
    if (factor != kOneRef) {
        for (MatrixEdge &s : succ) {
            if (!s.is_zero()) {
                s.weight = complex_.div(s.weight, factor);
                if (s.is_zero()) {
                    s.node = kTerminal;
                }
            }
        }
    }
    MatrixNode n;
    n.succ = succ;
    n.level = level;
    return {find_or_insert(n), factor};
}

VectorEdge Package::times(VectorEdge e, ComplexRef w) {
    if (e.is_zero() || w == kZeroRef) {
        return {};
    }
    return edge(e.node, complex_.mul(e.weight, w));
}

VectorEdge Package::times(VectorEdge e, Complex w) {
    if (e.is_zero()) {
        return {};
    }
    return edge(e.node, complex_.lookup(complex_.value(e.weight) * w));
}

VectorEdge Package::scale(VectorEdge e, Complex factor) {
    return times(e, factor);
}

MatrixEdge Package::scale(MatrixEdge e, Complex factor) {
    if (e.is_zero()) {
        return {};
    }
    ComplexRef r = complex_.lookup(complex_.value(e.weight) * factor);
    return r == kZeroRef ? MatrixEdge{} : MatrixEdge{e.node, r};
}

VectorEdge Package::make_basis_state(int n, std::uint64_t index) {
    checked_qubits(n);
    if (n < 64 && (index >> n) != 0) {
        throw std::invalid_argument("basis index out of range");
    }
    VectorEdge e{kTerminal, kOneRef};
    for (int level = 0; level < n; ++level) {
        if ((index >> level) & 1U) {
            e = make_vector_node(level, {VectorEdge{}, e});
        } else {
            e = make_vector_node(level, {e, VectorEdge{}});
        }
    }
    return e;
}

VectorEdge Package::make_basis_state(int n, std::string_view bits) {
    checked_qubits(n);
    if (bits.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("bitstring length does not match qubit count");
    }
    return make_basis_state(n, parse_bitstring(std::string(bits)));
}

VectorEdge Package::build_state_rec(std::span<const Complex> amps, int level, std::uint64_t offset) {
    if (level < 0) {
        return scalar(amps[offset]);
    }
    VectorEdge lo = build_state_rec(amps, level - 1, offset);
    VectorEdge hi = build_state_rec(amps, level - 1, offset + (std::uint64_t{1} << level));
    return make_vector_node(level, {lo, hi});
}

VectorEdge Package::from_statevector(std::span<const Complex> amplitudes) {
    std::size_t size = amplitudes.size();
    if (size < 2 || (size & (size - 1)) != 0) {
        throw std::invalid_argument("state vector length must be a power of two >= 2");
    }
    int n = std::countr_zero(size);
    return build_state_rec(amplitudes, n - 1, 0);
}

MatrixEdge Package::build_matrix_rec(const DenseMatrix &m, int level, std::size_t row, std::size_t col) {
    if (level < 0) {
        return matrix_scalar(m(row, col));
    }
    std::size_t half = std::size_t{1} << level;
    std::array<MatrixEdge, 4> succ;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            succ[2 * i + j] = build_matrix_rec(m, level - 1, row + i * half, col + j * half);
        }
    }
    return make_matrix_node(level, succ);
}

MatrixEdge Package::from_matrix(const DenseMatrix &m) {
    if (m.dim() < 2) {
        throw std::invalid_argument("matrix must act on at least one qubit");
    }
    return build_matrix_rec(m, std::countr_zero(m.dim()) - 1, 0, 0);
}

MatrixEdge Package::identity(int n) {
    if (n < 0) {
        throw std::invalid_argument("negative qubit count");
    }
    if (n == 0) {
        return MatrixEdge{kTerminal, kOneRef};
    }
    MatrixEdge e{kTerminal, kOneRef};
    if (!identity_nodes_.empty()) {
        e = MatrixEdge{identity_nodes_.back(), kOneRef};
    }
    for (int level = static_cast<int>(identity_nodes_.size()); level < n; ++level) {
        e = make_matrix_node(level, {e, MatrixEdge{}, MatrixEdge{}, e});
        identity_nodes_.push_back(e.node);
    }
    return MatrixEdge{identity_nodes_[static_cast<std::size_t>(n - 1)], kOneRef};
}

// Queries ---------------------------------------------------------------------

Complex Package::amplitude(VectorEdge e, int n, std::uint64_t index) const {
    if (e.is_zero()) {
        return 0.0;
    }
    if (qubits(e) != n) {
        throw std::invalid_argument("amplitude query length does not match the diagram's qubit count");
    }
    Complex w = complex_.value(e.weight);
    NodeId node = e.node;
    while (node != kTerminal) {
        const VectorNode &vn = vnodes_[node];
        const VectorEdge &s = vn.succ[(index >> vn.level) & 1U];
        if (s.is_zero()) {
            return 0.0;
        }
        w *= complex_.value(s.weight);
        node = s.node;
    }
    return w;
}

Complex Package::amplitude(VectorEdge e, std::string_view bits) const {
    if (!e.is_zero() && bits.size() != static_cast<std::size_t>(qubits(e))) {
        throw std::invalid_argument("bitstring length does not match the diagram's qubit count");
    }
    return amplitude(e, static_cast<int>(bits.size()), parse_bitstring(std::string(bits)));
}

void Package::accumulate_rec(VectorEdge e, Complex w, std::uint64_t offset, std::span<Complex> out) const {
    w *= complex_.value(e.weight);
    if (e.node == kTerminal) {
        out[offset] += w;
        return;
    }
    const VectorNode &n = vnodes_[e.node];
    if (!n.succ[0].is_zero()) {
        accumulate_rec(n.succ[0], w, offset, out);
    }
    if (!n.succ[1].is_zero()) {
        accumulate_rec(n.succ[1], w, offset + (std::uint64_t{1} << n.level), out);
    }
}

void Package::accumulate(VectorEdge e, int n, std::span<Complex> out, Complex scale) const {
    if (n < 0 || n > 62 || out.size() != (std::uint64_t{1} << n)) {
        throw std::invalid_argument("accumulator size does not match qubit count");
    }
    if (e.is_zero()) {
        return;
    }
    if (qubits(e) != n) {
        throw std::invalid_argument("diagram qubit count does not match accumulator");
    }
    accumulate_rec(e, scale, 0, out);
}

StateVector Package::extract(VectorEdge e, int n) const {
    if (n > config_.max_extract_qubits) {
        throw CapacityError("refusing to extract " + std::to_string(n) + " qubits (cap is " +
                            std::to_string(config_.max_extract_qubits) + ")");
    }
    if (n < 0) {
        throw std::invalid_argument("negative qubit count");
    }
    StateVector out(std::size_t{1} << n);
    accumulate(e, n, out);
    return out;
}

void Package::extract_matrix_rec(MatrixEdge e, Complex w, std::size_t row, std::size_t col, DenseMatrix &out) const {
    w *= complex_.value(e.weight);
    if (e.node == kTerminal) {
        out(row, col) += w;
        return;
    }
    const MatrixNode &n = mnodes_[e.node];
    std::size_t half = std::size_t{1} << n.level;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const MatrixEdge &s = n.succ[2 * i + j];
            if (!s.is_zero()) {
                extract_matrix_rec(s, w, row + i * half, col + j * half, out);
            }
        }
    }
}

DenseMatrix Package::extract_matrix(MatrixEdge e, int n) const {
    if (n < 1 || n > 14) {
        throw CapacityError("matrix extraction supports 1..14 qubits");
    }
    DenseMatrix out(std::size_t{1} << n);
    if (e.is_zero()) {
        return out;
    }
    if (qubits(e) != n) {
        throw std::invalid_argument("matrix diagram qubit count mismatch");
    }
    extract_matrix_rec(e, 1.0, 0, 0, out);
    return out;
}

std::size_t Package::size(VectorEdge e) const {
    if (e.is_terminal()) {
        return 0;
    }
    if (visit_stamp_.size() < vnodes_.size()) {
        visit_stamp_.resize(vnodes_.size(), 0);
    }
    if (++visit_epoch_ == 0) {
        std::fill(visit_stamp_.begin(), visit_stamp_.end(), 0);
        visit_epoch_ = 1;
    }
    std::size_t count = 0;
    std::vector<NodeId> stack{e.node};
    visit_stamp_[e.node] = visit_epoch_;
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        ++count;
        for (const VectorEdge &s : vnodes_[id].succ) {
            if (s.node != kTerminal && visit_stamp_[s.node] != visit_epoch_) {
                visit_stamp_[s.node] = visit_epoch_;
                stack.push_back(s.node);
            }
        }
    }
    return count;
}

std::size_t Package::size(MatrixEdge e) const {
    if (e.is_terminal()) {
        return 0;
    }
    std::vector<std::uint8_t> seen(mnodes_.size(), 0);
    std::vector<NodeId> stack{e.node};
    seen[e.node] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        ++count;
        for (const MatrixEdge &s : mnodes_[id].succ) {
            if (s.node != kTerminal && !seen[s.node]) {
                seen[s.node] = 1;
                stack.push_back(s.node);
            }
        }
    }
    return count;
}

// Operations ------------------------------------------------------------------

void Package::check_same_level(VectorEdge a, VectorEdge b, const char *op) const {
    if (!a.is_zero() && !b.is_zero() && qubits(a) != qubits(b)) {
        throw std::invalid_argument(std::string(op) + ": qubit count mismatch (" + std::to_string(qubits(a)) +
                                    " vs " + std::to_string(qubits(b)) + ")");
    }
}

VectorEdge Package::add(VectorEdge a, VectorEdge b) {
    check_same_level(a, b, "add");
    return add_rec(a, b);
}

VectorEdge Package::add_rec(VectorEdge a, VectorEdge b) {
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.node == b.node) {
        return edge(a.node, complex_.add(a.weight, b.weight));
    }
    if (b.node < a.node) {
        std::swap(a, b);
    }
    AddKey key{a, b};
    if (const VectorEdge *hit = add_cache_.find(key)) {
        return *hit;
    }
    const VectorNode na = vnodes_[a.node];
    const VectorNode nb = vnodes_[b.node];
    if (na.level != nb.level) {
        throw std::logic_error("add: operands at different levels");
    }
    std::array<VectorEdge, 2> r;
    for (int i = 0; i < 2; ++i) {
        r[i] = add_rec(times(na.succ[i], a.weight), times(nb.succ[i], b.weight));
    }
    VectorEdge result = make_vector_node(na.level, r);
    add_cache_.insert(key, result);
    return result;
}

VectorEdge Package::multiply(MatrixEdge m, VectorEdge v) {
    if (m.is_zero() || v.is_zero()) {
        return {};
    }
    if (qubits(m) != qubits(v)) {
        throw std::invalid_argument("multiply: qubit count mismatch (" + std::to_string(qubits(m)) + " vs " +
                                    std::to_string(qubits(v)) + ")");
    }
    VectorEdge r = multiply_rec(m.node, v.node);
    if (r.is_zero()) {
        return {};
    }
    Complex w = complex_.value(m.weight) * complex_.value(v.weight) * complex_.value(r.weight);
    return edge(r.node, complex_.lookup(w));
}

VectorEdge Package::multiply_rec(NodeId m, NodeId v) {
    if (m == kTerminal) {
        return {kTerminal, kOneRef};
    }
    const MatrixNode mn = mnodes_[m];
    if (is_identity(m, mn.level)) {
        return {v, kOneRef};
    }
    NodePairKey key{m, v};
    if (const VectorEdge *hit = multiply_cache_.find(key)) {
        return *hit;
    }
    const VectorNode vn = vnodes_[v];
    std::array<VectorEdge, 2> r;
    for (int i = 0; i < 2; ++i) {
        VectorEdge acc{};
        for (int j = 0; j < 2; ++j) {
            const MatrixEdge &me = mn.succ[2 * i + j];
            const VectorEdge &ve = vn.succ[j];
            if (me.is_zero() || ve.is_zero()) {
                continue;
            }
            VectorEdge p = multiply_rec(me.node, ve.node);
            if (p.is_zero()) {
                continue;
            }
            Complex w = complex_.value(p.weight) * complex_.value(me.weight) * complex_.value(ve.weight);
            acc = add_rec(acc, edge(p.node, complex_.lookup(w)));
        }
        r[i] = acc;
    }
    VectorEdge result = make_vector_node(mn.level, r);
    multiply_cache_.insert(key, result);
    return result;
}

VectorEdge Package::kron(VectorEdge upper, VectorEdge lower) {
    return kron(*this, upper, lower);
}

VectorEdge Package::kron(const Package &upper_pkg, VectorEdge upper, VectorEdge lower) {
    if (upper.is_zero() || lower.is_zero()) {
        return {};
    }
    const int offset = qubits(lower);
    if (upper_pkg.qubits(upper) + offset > 62) {
        throw CapacityError("kron result would exceed 62 qubits");
    }
    std::unordered_map<NodeId, VectorEdge> memo;
    auto rebuild = [&](auto &self, NodeId un) -> VectorEdge {
        if (un == kTerminal) {
            return {lower.node, kOneRef};
        }
        if (auto it = memo.find(un); it != memo.end()) {
            return it->second;
        }
        const VectorNode n = upper_pkg.vnodes_[un];
        std::array<VectorEdge, 2> r;
        for (int i = 0; i < 2; ++i) {
            if (!n.succ[i].is_zero()) {
                r[i] = times(self(self, n.succ[i].node), upper_pkg.weight(n.succ[i]));
            }
        }
        VectorEdge result = make_vector_node(n.level + offset, r);
        memo.emplace(un, result);
        return result;
    };
    VectorEdge core = rebuild(rebuild, upper.node);
    return times(core, upper_pkg.weight(upper) * weight(lower));
}

VectorEdge Package::import(const Package &src, VectorEdge e) {
    return kron(src, e, VectorEdge{kTerminal, kOneRef});
}

Complex Package::inner_product(VectorEdge a, VectorEdge b) {
    check_same_level(a, b, "inner_product");
    if (a.is_zero() || b.is_zero()) {
        return 0.0;
    }
    return std::conj(weight(a)) * weight(b) * inner_rec(a.node, b.node);
}

Complex Package::inner_rec(NodeId a, NodeId b) {
    if (a == kTerminal) {
        return 1.0;
    }
    NodePairKey key{a, b};
    if (const Complex *hit = inner_cache_.find(key)) {
        return *hit;
    }
    const VectorNode na = vnodes_[a];
    const VectorNode nb = vnodes_[b];
    Complex sum{};
    for (int i = 0; i < 2; ++i) {
        if (na.succ[i].is_zero() || nb.succ[i].is_zero()) {
            continue;
        }
        sum += std::conj(weight(na.succ[i])) * weight(nb.succ[i]) * inner_rec(na.succ[i].node, nb.succ[i].node);
    }
    inner_cache_.insert(key, sum);
    return sum;
}

double Package::norm(VectorEdge e) {
    return std::sqrt(std::max(0.0, inner_product(e, e).real()));
}

// Memory management -----------------------------------------------------------

void Package::pin(VectorEdge e) {
    pinned_vectors_.push_back(e);
}

void Package::unpin(VectorEdge e) {
    auto it = std::find(pinned_vectors_.begin(), pinned_vectors_.end(), e);
    if (it == pinned_vectors_.end()) {
        throw std::logic_error("unpin of an edge that is not pinned");
    }
    pinned_vectors_.erase(it);
}

void Package::pin(MatrixEdge e) {
    pinned_matrices_.push_back(e);
}

void Package::unpin(MatrixEdge e) {
    auto it = std::find(pinned_matrices_.begin(), pinned_matrices_.end(), e);
    if (it == pinned_matrices_.end()) {
        throw std::logic_error("unpin of an edge that is not pinned");
    }
    pinned_matrices_.erase(it);
}

std::size_t Package::gc(std::span<const VectorEdge> roots, std::span<const MatrixEdge> matrix_roots) {
    ++gc_runs_;
    complex_.clear_marks();
    std::vector<std::uint8_t> vmark(vnodes_.size(), 0);
    std::vector<std::uint8_t> mmark(mnodes_.size(), 0);
    std::vector<NodeId> vstack;
    std::vector<NodeId> mstack;

    auto root_vector = [&](VectorEdge e) {
        complex_.mark(e.weight);
        if (e.node != kTerminal && !vmark[e.node]) {
            vmark[e.node] = 1;
            vstack.push_back(e.node);
        }
    };
    auto root_matrix = [&](MatrixEdge e) {
        complex_.mark(e.weight);
        if (e.node != kTerminal && !mmark[e.node]) {
            mmark[e.node] = 1;
            mstack.push_back(e.node);
        }
    };
    for (VectorEdge e : roots) {
        root_vector(e);
    }
    for (VectorEdge e : pinned_vectors_) {
        root_vector(e);
    }
    for (MatrixEdge e : matrix_roots) {
        root_matrix(e);
    }
    for (MatrixEdge e : pinned_matrices_) {
        root_matrix(e);
    }
    for (NodeId id : identity_nodes_) {
        root_matrix(MatrixEdge{id, kOneRef});
    }

    while (!vstack.empty()) {
        NodeId id = vstack.back();
        vstack.pop_back();
        for (const VectorEdge &s : vnodes_[id].succ) {
            root_vector(s);
        }
    }
    while (!mstack.empty()) {
        NodeId id = mstack.back();
        mstack.pop_back();
        for (const MatrixEdge &s : mnodes_[id].succ) {
            root_matrix(s);
        }
    }

    std::size_t reclaimed = 0;
    for (NodeId id = 1; id < vnodes_.size(); ++id) {
        if (!vmark[id] && vnodes_[id].level != kDeadLevel) {
            vnodes_[id].level = kDeadLevel;
            vfree_.push_back(id);
            ++reclaimed;
        }
    }
    for (NodeId id = 1; id < mnodes_.size(); ++id) {
        if (!mmark[id] && mnodes_[id].level != kDeadLevel) {
            mnodes_[id].level = kDeadLevel;
            mfree_.push_back(id);
            ++reclaimed;
        }
    }
    // Reuse low slots first so the pools stay compact.
    std::sort(vfree_.begin(), vfree_.end(), std::greater<>());
    std::sort(mfree_.begin(), mfree_.end(), std::greater<>());
    rehash_vectors(std::max(kInitialBuckets, std::bit_ceil(live_vector_nodes())));
    rehash_matrices(std::max(kInitialBuckets, std::bit_ceil(live_matrix_nodes())));

    add_cache_.clear();
    multiply_cache_.clear();
    inner_cache_.clear();
    complex_.sweep();

    gc_threshold_ = std::max(config_.gc_threshold, 2 * (live_vector_nodes() + live_matrix_nodes()));
    return reclaimed;
}

// Export ----------------------------------------------------------------------

void Package::write_dot(std::ostream &out, VectorEdge e) const {
    out << "digraph vector_dd {\n";
    out << "  root [shape=point];\n";
    auto name = [](NodeId id) { return id == kTerminal ? std::string("t") : "n" + std::to_string(id); };
    if (e.is_zero()) {
        out << "  t [shape=box, label=\"0\"];\n";
        out << "  root -> t [label=\"0.0,0.0\"];\n}\n";
        return;
    }
    out << "  t [shape=box, label=\"1\"];\n";
    out << "  root -> " << name(e.node) << " [label=\"" << weight_label(weight(e)) << "\"];\n";
    std::vector<NodeId> order;
    std::vector<NodeId> stack;
    std::unordered_map<NodeId, bool> seen;
    if (e.node != kTerminal) {
        stack.push_back(e.node);
        seen[e.node] = true;
    }
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        order.push_back(id);
        for (const VectorEdge &s : vnodes_[id].succ) {
            if (s.node != kTerminal && !seen[s.node]) {
                seen[s.node] = true;
                stack.push_back(s.node);
            }
        }
    }
    std::sort(order.begin(), order.end(),
              [&](NodeId a, NodeId b) { return vnodes_[a].level > vnodes_[b].level || (vnodes_[a].level == vnodes_[b].level && a < b); });
    for (NodeId id : order) {
        const VectorNode &n = vnodes_[id];
        out << "  " << name(id) << " [label=\"q" << n.level << "\", level=" << n.level;
        for (int i = 0; i < 2; ++i) {
            const VectorEdge &s = n.succ[i];
            out << ", succ" << i << "=\"" << (s.is_zero() ? std::string("none") : name(s.node)) << "\", w" << i
                << "=\"" << weight_label(weight(s)) << "\"";
        }
        out << "];\n";
        for (int i = 0; i < 2; ++i) {
            const VectorEdge &s = n.succ[i];
            if (!s.is_zero()) {
                out << "  " << name(id) << " -> " << name(s.node) << " [label=\"" << weight_label(weight(s))
                    << "\"" << (i == 0 ? ", style=dashed" : "") << "];\n";
            }
        }
    }
    out << "}\n";
}

}  // namespace sfdd
