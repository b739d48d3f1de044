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

#include "sfdd/complex_table.h"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sfdd {

namespace {

constexpr double kMaxQuantized = 4.0e18;

std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

}  // namespace

ComplexTable::ComplexTable(double tolerance) : tolerance_(tolerance) {
    if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
        throw std::invalid_argument("complex table tolerance must be positive and finite");
    }
    heads_.assign(1024, kNil);
    entries_.reserve(1024);
    for (Complex c : {Complex{0.0, 0.0}, Complex{1.0, 0.0}}) {
        entries_.push_back(Entry{c, kNil, true, false});
        insert_into_bucket(static_cast<std::uint32_t>(entries_.size() - 1));
    }
    // Permanent entries for the values gate matrices produce most often, so
    // products that round near them collapse onto the exact constant.
    const double r = 1.0 / std::numbers::sqrt2;
    const double parts[] = {0.0, 1.0, -1.0, 0.5, -0.5, 0.25, -0.25, r, -r, r / 2, -r / 2};
    for (double re : parts) {
        for (double im : parts) {
            lookup(Complex{re, im});
        }
    }
    constants_ = static_cast<std::uint32_t>(entries_.size());
}

ComplexTable::BucketKey ComplexTable::key_of(Complex v) const {
    double qr = std::floor(v.real() / tolerance_);
    double qi = std::floor(v.imag() / tolerance_);
    if (std::abs(qr) < kMaxQuantized && std::abs(qi) < kMaxQuantized) {
        return {static_cast<std::int64_t>(qr), static_cast<std::int64_t>(qi), false};
    }
    // Far outside the unit range the absolute tolerance is below one ulp;
    // such values are only matched exactly.
    return {std::bit_cast<std::int64_t>(v.real()), std::bit_cast<std::int64_t>(v.imag()), true};
}

std::size_t ComplexTable::slot_of(std::int64_t re, std::int64_t im, bool exact) const {
    std::uint64_t h = mix(static_cast<std::uint64_t>(re) * 0x9E3779B97F4A7C15ULL ^
                          (static_cast<std::uint64_t>(im) + (exact ? 0x5bd1e995ULL : 0ULL)));
    return static_cast<std::size_t>(h) & (heads_.size() - 1);
}

bool ComplexTable::close(Complex a, Complex b) const {
    return std::abs(a.real() - b.real()) <= tolerance_ && std::abs(a.imag() - b.imag()) <= tolerance_;
}

std::uint32_t ComplexTable::find_in_slot(std::size_t slot, Complex v) const {
    for (std::uint32_t id = heads_[slot]; id != kNil; id = entries_[id].next) {
        if (close(entries_[id].value, v)) {
            return id;
        }
    }
    return kNil;
}

void ComplexTable::insert_into_bucket(std::uint32_t id) {
    BucketKey k = key_of(entries_[id].value);
    std::size_t slot = slot_of(k.re, k.im, k.exact);
    entries_[id].next = heads_[slot];
    heads_[slot] = id;
}

void ComplexTable::rehash(std::size_t bucket_count) {
    heads_.assign(bucket_count, kNil);
    for (std::uint32_t id = 0; id < entries_.size(); ++id) {
        if (entries_[id].live) {
            insert_into_bucket(id);
        }
    }
}

ComplexRef ComplexTable::lookup(Complex v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw std::invalid_argument("non-finite complex value");
    }
    if (close(v, Complex{0.0, 0.0})) {
        return kZeroRef;
    }
    if (close(v, Complex{1.0, 0.0})) {
        return kOneRef;
    }

    BucketKey k = key_of(v);
    if (k.exact) {
        std::uint32_t hit = find_in_slot(slot_of(k.re, k.im, true), v);
        if (hit != kNil) {
            return ComplexRef{hit};
        }
    } else {
        std::uint32_t hit = find_in_slot(slot_of(k.re, k.im, false), v);
        if (hit != kNil) {
            return ComplexRef{hit};
        }
        for (std::int64_t dr = -1; dr <= 1; ++dr) {
            for (std::int64_t di = -1; di <= 1; ++di) {
                if (dr == 0 && di == 0) {
                    continue;
                }
                hit = find_in_slot(slot_of(k.re + dr, k.im + di, false), v);
                if (hit != kNil) {
                    return ComplexRef{hit};
                }
            }
        }
    }

    std::uint32_t id;
    if (!free_.empty()) {
        id = free_.back();
        free_.pop_back();
        entries_[id] = Entry{v, kNil, true, false};
    } else {
        id = static_cast<std::uint32_t>(entries_.size());
        entries_.push_back(Entry{v, kNil, true, false});
    }
    insert_into_bucket(id);
    if (live_count() > heads_.size()) {
        rehash(heads_.size() * 2);
    }
    return ComplexRef{id};
}

ComplexRef ComplexTable::add(ComplexRef a, ComplexRef b) {
    if (a == kZeroRef) {
        return b;
    }
    if (b == kZeroRef) {
        return a;
    }
    return lookup(value(a) + value(b));
}

ComplexRef ComplexTable::sub(ComplexRef a, ComplexRef b) {
    if (b == kZeroRef) {
        return a;
    }
    return lookup(value(a) - value(b));
}

ComplexRef ComplexTable::mul(ComplexRef a, ComplexRef b) {
    if (a == kZeroRef || b == kZeroRef) {
        return kZeroRef;
    }
    if (a == kOneRef) {
        return b;
    }
    if (b == kOneRef) {
        return a;
    }
    return lookup(value(a) * value(b));
}

ComplexRef ComplexTable::div(ComplexRef a, ComplexRef b) {
    if (b == kZeroRef) {
        throw std::domain_error("complex division by zero");
    }
    if (b == kOneRef) {
        return a;
    }
    if (a == b) {
        return kOneRef;
    }
    return lookup(value(a) / value(b));
}

ComplexRef ComplexTable::neg(ComplexRef a) {
    if (a == kZeroRef) {
        return a;
    }
    return lookup(-value(a));
}

ComplexRef ComplexTable::conj(ComplexRef a) {
    Complex v = value(a);
    if (v.imag() == 0.0) {
        return a;
    }
    return lookup(std::conj(v));
}

void ComplexTable::clear_marks() {
    for (Entry &e : entries_) {
        e.marked = false;
    }
}

std::size_t ComplexTable::sweep() {
    for (std::uint32_t id = 0; id < constants_; ++id) {
        entries_[id].marked = true;
    }
    std::size_t reclaimed = 0;
    for (std::uint32_t id = 0; id < entries_.size(); ++id) {
        Entry &e = entries_[id];
        if (e.live && !e.marked) {
            e.live = false;
            free_.push_back(id);
            ++reclaimed;
        }
        e.marked = false;
    }
    if (reclaimed > 0) {
        std::size_t buckets = heads_.size();
        while (buckets > 1024 && live_count() * 4 < buckets) {
            buckets /= 2;
        }
        rehash(buckets);
    }
    return reclaimed;
}

}  // namespace sfdd
