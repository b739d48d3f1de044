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

#ifndef SFDD_DD_PACKAGE_H
#define SFDD_DD_PACKAGE_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "sfdd/complex_table.h"
#include "sfdd/compute_cache.h"
#include "sfdd/linalg.h"

namespace sfdd {

using NodeId = std::uint32_t;
inline constexpr NodeId kTerminal = 0;

/// Weighted edge into a vector node. A zero weight always targets the
/// terminal. An edge straight into the terminal is a 0-qubit scalar.
struct VectorEdge {
    NodeId node = kTerminal;
    ComplexRef weight = kZeroRef;

    bool is_terminal() const {
        return node == kTerminal;
    }
    bool is_zero() const {
        return weight == kZeroRef;
    }
    friend bool operator==(const VectorEdge &, const VectorEdge &) = default;
};

/// Weighted edge into a matrix node; same zero-edge form as VectorEdge.
struct MatrixEdge {
    NodeId node = kTerminal;
    ComplexRef weight = kZeroRef;

    bool is_terminal() const {
        return node == kTerminal;
    }
    bool is_zero() const {
        return weight == kZeroRef;
    }
    friend bool operator==(const MatrixEdge &, const MatrixEdge &) = default;
};

/// Node deciding qubit q_level; succ[b] is the sub-vector with q_level = b.
struct VectorNode {
    std::array<VectorEdge, 2> succ{};
    std::int32_t level = -1;
    NodeId next = kTerminal;
};

/// succ[2 * row_bit + col_bit] is the block for |row_bit><col_bit|.
struct MatrixNode {
    std::array<MatrixEdge, 4> succ{};
    std::int32_t level = -1;
    NodeId next = kTerminal;
};

struct PackageConfig {
    double tolerance = kDefaultTolerance;
    /// extract() refuses vectors with more qubits than this.
    int max_extract_qubits = 30;
    /// log2 of the slot count of each compute cache.
    int cache_bits = 16;
    /// Live-node count above which gc_due() reports true.
    std::size_t gc_threshold = std::size_t{1} << 17;
};

/// A decision diagram package: unique tables, compute caches and the weight
/// table for one single-writer simulation context.
///
/// Nodes are normalized by dividing all successor weights by the one of
/// largest magnitude (leftmost among magnitudes equal within tolerance),
/// which is pulled into the incoming edge. Stored successor weights thus have
/// magnitude at most one. Together with hash-consing this makes equal
/// sub-vectors share one node.
///
/// Parallel code uses one package per worker. Edges from another package
/// are brought in with import() or the two-package kron().
class Package {
   public:
    explicit Package(PackageConfig config = {});

    Package(const Package &) = delete;
    Package &operator=(const Package &) = delete;

    const PackageConfig &config() const {
        return config_;
    }
    ComplexTable &complex_table() {
        return complex_;
    }
    const ComplexTable &complex_table() const {
        return complex_;
    }

    Complex weight(VectorEdge e) const {
        return complex_.value(e.weight);
    }
    Complex weight(MatrixEdge e) const {
        return complex_.value(e.weight);
    }
    const VectorNode &vector_node(NodeId id) const {
        return vnodes_[id];
    }
    const MatrixNode &matrix_node(NodeId id) const {
        return mnodes_[id];
    }

    /// Qubit count spanned by an edge (root level + 1, a scalar spans 0).
    int qubits(VectorEdge e) const {
        return vnodes_[e.node].level + 1;
    }
    int qubits(MatrixEdge e) const {
        return mnodes_[e.node].level + 1;
    }

    // Construction ----------------------------------------------------------

    static VectorEdge zero_vector() {
        return {};
    }
    VectorEdge scalar(Complex w);
    MatrixEdge matrix_scalar(Complex w);

    /// Normalizing node constructor. Successors must be canonical edges of
    /// level `level - 1` (or zero edges).
    VectorEdge make_vector_node(int level, std::array<VectorEdge, 2> succ);
    MatrixEdge make_matrix_node(int level, std::array<MatrixEdge, 4> succ);

    VectorEdge scale(VectorEdge e, Complex factor);
    MatrixEdge scale(MatrixEdge e, Complex factor);

    /// Basis state |bits>; bits[0] is q_{n-1}, bits[n-1] is q_0.
    VectorEdge make_basis_state(int n, std::string_view bits);
    VectorEdge make_basis_state(int n, std::uint64_t index);
    VectorEdge from_statevector(std::span<const Complex> amplitudes);
    MatrixEdge from_matrix(const DenseMatrix &m);
    MatrixEdge identity(int n);

    // Queries ---------------------------------------------------------------

    /// Product of the edge weights along the path selected by bits
    /// (same bit order as make_basis_state).
    Complex amplitude(VectorEdge e, std::string_view bits) const;
    Complex amplitude(VectorEdge e, int n, std::uint64_t index) const;

    /// Full amplitude array by one recursive traversal. Throws CapacityError
    /// when n exceeds config().max_extract_qubits.
    StateVector extract(VectorEdge e, int n) const;
    StateVector extract(VectorEdge e) const {
        return extract(e, qubits(e));
    }
    /// Adds scale * e into out (out.size() == 2^n) in one traversal.
    void accumulate(VectorEdge e, int n, std::span<Complex> out, Complex scale = 1.0) const;

    DenseMatrix extract_matrix(MatrixEdge e, int n) const;

    /// Reachable non-terminal nodes.
    std::size_t size(VectorEdge e) const;
    std::size_t size(MatrixEdge e) const;

    // Operations ------------------------------------------------------------

    VectorEdge add(VectorEdge a, VectorEdge b);
    VectorEdge multiply(MatrixEdge m, VectorEdge v);
    /// upper (x) lower, both owned by this package.
    VectorEdge kron(VectorEdge upper, VectorEdge lower);
    /// upper (owned by upper_pkg) (x) lower (owned by this package). The
    /// upper structure is rebuilt here with the lower root in place of its
    /// terminal.
    VectorEdge kron(const Package &upper_pkg, VectorEdge upper, VectorEdge lower);
    /// Copies a diagram from another package, re-canonicalizing weights.
    VectorEdge import(const Package &src, VectorEdge e);
    /// <a|b>.
    Complex inner_product(VectorEdge a, VectorEdge b);
    double norm(VectorEdge e);

    // Memory management -----------------------------------------------------

    /// Pinned edges survive gc() without being passed as roots.
    void pin(VectorEdge e);
    void unpin(VectorEdge e);
    void pin(MatrixEdge e);
    void unpin(MatrixEdge e);

    /// Reclaims every node (and weight) not reachable from the given roots,
    /// the pinned edges, or the identity cache. Compute caches are cleared.
    /// Returns the number of reclaimed nodes.
    std::size_t gc(std::span<const VectorEdge> roots = {}, std::span<const MatrixEdge> matrix_roots = {});
    bool gc_due() const {
        return live_vector_nodes() + live_matrix_nodes() > gc_threshold_;
    }

    std::size_t live_vector_nodes() const {
        return vnodes_.size() - 1 - vfree_.size();
    }
    std::size_t live_matrix_nodes() const {
        return mnodes_.size() - 1 - mfree_.size();
    }
    std::size_t gc_runs() const {
        return gc_runs_;
    }

    /// Graphviz rendering, one statement per node.
    void write_dot(std::ostream &out, VectorEdge e) const;

   private:
    struct AddKey {
        VectorEdge a;
        VectorEdge b;
        friend bool operator==(const AddKey &, const AddKey &) = default;
    };
    struct NodePairKey {
        NodeId a;
        NodeId b;
        friend bool operator==(const NodePairKey &, const NodePairKey &) = default;
    };
    struct AddKeyHash {
        std::size_t operator()(const AddKey &k) const;
    };
    struct NodePairKeyHash {
        std::size_t operator()(const NodePairKey &k) const;
    };

    template <std::size_t N, typename Edge>
    int pivot(std::array<Edge, N> &succ) const;
    VectorEdge edge(NodeId node, ComplexRef w) const {
        return w == kZeroRef ? VectorEdge{} : VectorEdge{node, w};
    }
    VectorEdge times(VectorEdge e, ComplexRef w);
    VectorEdge times(VectorEdge e, Complex w);
    NodeId find_or_insert(const VectorNode &n);
    NodeId find_or_insert(const MatrixNode &n);
    void rehash_vectors(std::size_t buckets);
    void rehash_matrices(std::size_t buckets);
    bool is_identity(NodeId m, int level) const {
        return level >= 0 && static_cast<std::size_t>(level) < identity_nodes_.size() && identity_nodes_[level] == m;
    }

    VectorEdge add_rec(VectorEdge a, VectorEdge b);
    VectorEdge multiply_rec(NodeId m, NodeId v);
    Complex inner_rec(NodeId a, NodeId b);
    void accumulate_rec(VectorEdge e, Complex w, std::uint64_t offset, std::span<Complex> out) const;
    VectorEdge build_state_rec(std::span<const Complex> amps, int level, std::uint64_t offset);
    MatrixEdge build_matrix_rec(const DenseMatrix &m, int level, std::size_t row, std::size_t col);
    void extract_matrix_rec(MatrixEdge e, Complex w, std::size_t row, std::size_t col, DenseMatrix &out) const;
    void check_same_level(VectorEdge a, VectorEdge b, const char *op) const;

    PackageConfig config_;
    ComplexTable complex_;

    std::vector<VectorNode> vnodes_;
    std::vector<NodeId> vfree_;
    std::vector<NodeId> vheads_;
    std::vector<MatrixNode> mnodes_;
    std::vector<NodeId> mfree_;
    std::vector<NodeId> mheads_;

    std::vector<NodeId> identity_nodes_;
    std::vector<VectorEdge> pinned_vectors_;
    std::vector<MatrixEdge> pinned_matrices_;

    ComputeCache<AddKey, VectorEdge, AddKeyHash> add_cache_;
    ComputeCache<NodePairKey, VectorEdge, NodePairKeyHash> multiply_cache_;
    ComputeCache<NodePairKey, Complex, NodePairKeyHash> inner_cache_;

    std::size_t gc_threshold_;
    std::size_t gc_runs_ = 0;
    mutable std::vector<std::uint32_t> visit_stamp_;
    mutable std::uint32_t visit_epoch_ = 0;
};

}  // namespace sfdd

#endif
