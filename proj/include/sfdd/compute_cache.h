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

#ifndef SFDD_COMPUTE_CACHE_H
#define SFDD_COMPUTE_CACHE_H

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sfdd {

/// Direct-mapped memo table: a colliding insert overwrites the slot.
template <class Key, class Value, class Hash>
class ComputeCache {
   public:
    explicit ComputeCache(int bits) : slots_(std::size_t{1} << bits), mask_(slots_.size() - 1) {
    }

    const Value *find(const Key &key) const {
        const Slot &s = slots_[Hash{}(key) & mask_];
        if (s.generation == generation_ && s.key == key) {
            return &s.value;
        }
        return nullptr;
    }

    void insert(const Key &key, const Value &value) {
        Slot &s = slots_[Hash{}(key) & mask_];
        s.key = key;
        s.value = value;
        s.generation = generation_;
    }

    void clear() {
        ++generation_;
        if (generation_ == 0) {
            for (Slot &s : slots_) {
                s.generation = 0;
            }
            generation_ = 1;
        }
    }

   private:
    struct Slot {
        Key key{};
        Value value{};
        std::uint32_t generation = 0;
    };

    std::vector<Slot> slots_;
    std::size_t mask_;
    std::uint32_t generation_ = 1;
};

}  // namespace sfdd

#endif
