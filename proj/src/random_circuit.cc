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

#include "sfdd/random_circuit.h"

#include <array>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sfdd {

namespace {

/// Bit-level helpers on mt19937_64 so results do not depend on the
/// standard library's distribution implementations.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }
    std::uint64_t below(std::uint64_t bound) {
        return engine_() % bound;
    }
    double unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }
    double angle() {
        return unit() * 2.0 * std::numbers::pi;
    }

   private:
    std::mt19937_64 engine_;
};

std::vector<std::pair<Qubit, Qubit>> random_matching(Rng &rng, int n) {
    std::vector<Qubit> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        order[static_cast<std::size_t>(i)] = i;
    }
    for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng.below(i)]);
    }
    std::vector<std::pair<Qubit, Qubit>> pairs;
    for (std::size_t i = 0; i + 1 < order.size(); i += 2) {
        pairs.emplace_back(order[i], order[i + 1]);
    }
    return pairs;
}

constexpr std::array<GateKind, 4> kSupremacySingles{GateKind::T, GateKind::SX, GateKind::SY, GateKind::H};
constexpr std::array<GateKind, 14> kMixedSingles{GateKind::I,  GateKind::X,   GateKind::Y,  GateKind::Z, GateKind::H,
                                                 GateKind::S,  GateKind::Sdg, GateKind::T,  GateKind::Tdg,
                                                 GateKind::SX, GateKind::SY,  GateKind::RX, GateKind::RY,
                                                 GateKind::RZ};
constexpr std::array<GateKind, 5> kMixedPairs{GateKind::CX, GateKind::CZ, GateKind::CP, GateKind::SWAP, GateKind::CZ};

std::vector<double> random_params(Rng &rng, GateKind kind) {
    std::vector<double> params(static_cast<std::size_t>(gate_info(kind).params));
    for (double &p : params) {
        p = rng.angle();
    }
    return params;
}

}  // namespace

Circuit generate_random_circuit(const RandomCircuitOptions &o) {
    if (o.depth < 0) {
        throw std::invalid_argument("depth must be non-negative");
    }
    Circuit c(o.num_qubits);
    Rng rng(o.seed);
    int cross_left = o.cross_block_budget.value_or(-1);
    auto crosses = [&](Qubit a, Qubit b) { return (a < o.cut) != (b < o.cut); };

    if (o.family == CircuitFamily::Supremacy) {
        for (Qubit q = 0; q < o.num_qubits; ++q) {
            c.add(GateKind::H, {q});
        }
    }
    for (int layer = 0; layer < o.depth; ++layer) {
        for (Qubit q = 0; q < o.num_qubits; ++q) {
            GateKind kind = o.family == CircuitFamily::Supremacy
                                ? kSupremacySingles[rng.below(kSupremacySingles.size())]
                                : kMixedSingles[rng.below(kMixedSingles.size())];
            if (o.family == CircuitFamily::Mixed && kind == GateKind::RZ && rng.below(2) == 0) {
                kind = GateKind::P;
            }
            c.add(kind, {q}, random_params(rng, kind));
        }
        for (auto [a, b] : random_matching(rng, o.num_qubits)) {
            if (rng.unit() >= o.two_qubit_density) {
                continue;
            }
            if (o.cross_block_budget.has_value() && crosses(a, b)) {
                if (cross_left == 0) {
                    continue;
                }
                --cross_left;
            }
            GateKind kind = o.family == CircuitFamily::Supremacy ? GateKind::CZ
                                                                 : kMixedPairs[rng.below(kMixedPairs.size())];
            c.add(kind, {a, b}, random_params(rng, kind));
        }
    }
    return c;
}

}  // namespace sfdd
