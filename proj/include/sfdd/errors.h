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

#ifndef SFDD_ERRORS_H
#define SFDD_ERRORS_H

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sfdd {

/// Input text that does not belong to the supported QASM subset.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &message, std::size_t line, std::size_t column);

    std::size_t line() const {
        return line_;
    }
    std::size_t column() const {
        return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
};

/// A request that would need more memory (or more paths) than allowed.
class CapacityError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// A circuit whose gate structure the hybrid partitioner cannot handle.
class TopologyError : public std::runtime_error {
   public:
    TopologyError(const std::string &message, std::size_t gate_index);

    std::size_t gate_index() const {
        return gate_index_;
    }

   private:
    std::size_t gate_index_;
};

class TimeoutError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Optional wall-clock limit checked cooperatively by the engines.
struct Deadline {
    using Clock = std::chrono::steady_clock;
    std::optional<Clock::time_point> at;

    static Deadline after(std::chrono::duration<double> budget) {
        return Deadline{Clock::now() + std::chrono::duration_cast<Clock::duration>(budget)};
    }

    void check() const {
        if (at.has_value() && Clock::now() > *at) {
            throw TimeoutError("deadline exceeded");
        }
    }
};

}  // namespace sfdd

#endif
