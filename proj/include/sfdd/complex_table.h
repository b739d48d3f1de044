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

#ifndef SFDD_COMPLEX_TABLE_H
#define SFDD_COMPLEX_TABLE_H

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sfdd {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-13;

/// Handle of a uniqued complex value. Handles are only comparable within the
/// table that issued them.
struct ComplexRef {
    std::uint32_t id = 0;

    friend bool operator==(ComplexRef, ComplexRef) = default;
};

inline constexpr ComplexRef kZeroRef{0};
inline constexpr ComplexRef kOneRef{1};

/// Tolerance-canonicalizing store for decision diagram edge weights.
///
/// Two values whose real and imaginary parts each differ by at most the
/// tolerance map to the same handle (the first one inserted wins). Values
/// within tolerance of 0 or 1 always map to the reserved handles kZeroRef and
/// kOneRef. A small fixed set of constants (components in {0, +-1, +-1/2,
/// +-1/4, +-1/sqrt2, +-1/(2 sqrt2)}) is inserted up front and never swept.
/// Other handles stay valid until a sweep reclaims them.
///
/// A table is single-writer. Concurrent simulations each own a private table;
/// values crossing tables are re-canonicalized through lookup().
class ComplexTable {
   public:
    explicit ComplexTable(double tolerance = kDefaultTolerance);

    /// Throws std::invalid_argument on NaN or infinite input.
    ComplexRef lookup(Complex v);

    Complex value(ComplexRef r) const {
        return entries_[r.id].value;
    }

    ComplexRef add(ComplexRef a, ComplexRef b);
    ComplexRef sub(ComplexRef a, ComplexRef b);
    ComplexRef mul(ComplexRef a, ComplexRef b);
    /// Throws std::domain_error when b is kZeroRef.
    ComplexRef div(ComplexRef a, ComplexRef b);
    ComplexRef neg(ComplexRef a);
    ComplexRef conj(ComplexRef a);

    double tolerance() const {
        return tolerance_;
    }

    /// Entries currently holding a value (including the two constants).
    std::size_t live_count() const {
        return entries_.size() - free_.size();
    }
    /// Entries inserted by the constructor; they survive every sweep.
    std::size_t constant_count() const {
        return constants_;
    }

    // Garbage collection: clear_marks(), mark() every reachable handle, then
    // sweep(). Returns the number of reclaimed entries.
    void clear_marks();
    void mark(ComplexRef r) {
        entries_[r.id].marked = true;
    }
    std::size_t sweep();

   private:
    struct Entry {
        Complex value;
        std::uint32_t next = kNil;
        bool live = false;
        bool marked = false;
    };
    struct BucketKey {
        std::int64_t re;
        std::int64_t im;
        bool exact;
    };

    static constexpr std::uint32_t kNil = 0xFFFFFFFFu;

    BucketKey key_of(Complex v) const;
    std::size_t slot_of(std::int64_t re, std::int64_t im, bool exact) const;
    std::uint32_t find_in_slot(std::size_t slot, Complex v) const;
    bool close(Complex a, Complex b) const;
    void insert_into_bucket(std::uint32_t id);
    void rehash(std::size_t bucket_count);

    double tolerance_;
    std::vector<Entry> entries_;
    std::vector<std::uint32_t> heads_;
    std::vector<std::uint32_t> free_;
    std::uint32_t constants_ = 2;
};

}  // namespace sfdd

#endif
