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

#ifndef SFDD_HYBRID_H
#define SFDD_HYBRID_H

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sfdd/circuit.h"
#include "sfdd/dd_package.h"
#include "sfdd/errors.h"

namespace sfdd {

/// Lower block is qubits [0, cut), upper block is [cut, n).
struct Partition {
    int cut = 0;

    static Partition halves(int n) {
        return Partition{n / 2};
    }
    bool is_upper(Qubit q) const {
        return q >= cut;
    }
    void validate(int n) const;
};

/// One summand of a cross-block gate: `upper` acts on the upper operand,
/// `lower` on the lower operand.
struct SchmidtTerm {
    DenseMatrix upper;
    DenseMatrix lower;
};

struct DecisionPoint {
    std::size_t gate_index = 0;
    Qubit upper_qubit = 0;
    Qubit lower_qubit = 0;
    /// Basis order 00, 01, 10, 11 of |i><j| on the upper operand, zero
    /// sub-blocks removed.
    std::vector<SchmidtTerm> terms;
};

struct Classification {
    std::vector<std::size_t> lower_gates;
    std::vector<std::size_t> upper_gates;
    std::vector<DecisionPoint> decisions;
};

/// Throws TopologyError for a cross-block gate on more than two qubits.
Classification classify(const Circuit &c, const Partition &p);

/// Splits a two-qubit gate straddling the cut over the operator basis of its
/// upper operand. Throws std::invalid_argument otherwise.
DecisionPoint schmidt_terms(const Gate &g, const Partition &p, std::size_t gate_index = 0);

/// Reassembles the 4x4 matrix with the upper operand as the high bit.
DenseMatrix reconstruct(const DecisionPoint &d);

/// One digit per decision point; the first decision is most significant.
struct PathId {
    std::vector<std::uint8_t> digits;

    static PathId from_index(std::uint64_t index, const std::vector<DecisionPoint> &decisions);
    std::uint64_t index(const std::vector<DecisionPoint> &decisions) const;
    std::string to_string() const;
    friend bool operator==(const PathId &, const PathId &) = default;
};

/// Product of the term counts. Throws CapacityError above 2^62.
std::uint64_t path_count(const std::vector<DecisionPoint> &decisions);

/// Block-local gate sequences with slots for the decision factors.
class BlockProgram {
   public:
    BlockProgram(const Circuit &c, const Partition &p);

    int num_qubits() const {
        return n_;
    }
    const Partition &partition() const {
        return partition_;
    }
    const std::vector<DecisionPoint> &decisions() const {
        return classification_.decisions;
    }
    const Classification &classification() const {
        return classification_;
    }

    /// segments(upper)[j] holds the fixed operations between decision j - 1
    /// and decision j; there are decisions().size() + 1 segments.
    const std::vector<std::vector<Operation>> &segments(bool upper) const {
        return upper ? upper_segments_ : lower_segments_;
    }
    /// Block-local factor of decision j, term t.
    Operation factor(bool upper, std::size_t j, std::size_t t) const;
    int block_qubits(bool upper) const {
        return upper ? n_ - partition_.cut : partition_.cut;
    }

   private:
    int n_;
    Partition partition_;
    Classification classification_;
    std::vector<std::vector<Operation>> lower_segments_;
    std::vector<std::vector<Operation>> upper_segments_;
};

struct BlockStates {
    VectorEdge upper;
    VectorEdge lower;
};

/// Simulates both blocks of one path from scratch in two packages.
BlockStates simulate_path(const BlockProgram &program, const PathId &path, Package &pkg_upper, Package &pkg_lower);

struct HybridOptions {
    std::optional<int> cut;
    int workers = 1;
    PackageConfig package;
    /// Keep each worker's block states after every decision and resume from
    /// the first digit that differs from the previous path.
    bool reuse_prefixes = true;
    /// Amplitude mode: one shared accumulator behind a mutex instead of one
    /// per worker.
    bool low_memory = false;
    /// Bytes allowed for amplitude accumulators; 0 means half of physical memory.
    std::size_t memory_budget = 0;
    /// Record the node count after every block operation.
    bool track_nodes = false;
    /// When set, paths are visited in a pseudo-random permutation.
    std::optional<std::uint64_t> path_order_seed;
    Deadline deadline;
};

struct PathStats {
    std::uint64_t index = 0;
    std::size_t max_nodes = 0;
    bool skipped = false;
    double seconds = 0.0;
};

struct HybridStats {
    std::string mode;
    int n = 0;
    int cut = 0;
    std::size_t decisions = 0;
    std::uint64_t path_count = 0;
    std::uint64_t zero_paths = 0;
    int workers = 1;
    double t_simulate = 0.0;
    double t_kron = 0.0;
    double t_extract = 0.0;
    double t_add = 0.0;
    double t_total = 0.0;
    /// Largest block diagram seen in any path.
    std::size_t max_block_nodes = 0;
    /// Largest kron result.
    std::size_t max_kron_nodes = 0;
    /// DD mode: largest sum at each level of the addition tree.
    std::vector<std::size_t> addition_level_max_nodes;
    std::size_t final_nodes = 0;
    std::vector<PathStats> paths;

    std::string to_json() const;
};

struct HybridDdResult {
    std::unique_ptr<Package> package;
    VectorEdge state;
    HybridStats stats;
};

struct HybridAmpResult {
    StateVector state;
    HybridStats stats;
};

HybridDdResult run_hybrid_dd(const Circuit &c, const HybridOptions &options = {});
HybridAmpResult run_hybrid_amp(const Circuit &c, const HybridOptions &options = {});

/// Bytes of physical memory, 0 when unknown.
std::size_t physical_memory_bytes();

}  // namespace sfdd

#endif
