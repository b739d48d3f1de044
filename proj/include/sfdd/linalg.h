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

#ifndef SFDD_LINALG_H
#define SFDD_LINALG_H

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "sfdd/complex_table.h"

namespace sfdd {

/// Dense amplitude array. Index bit i holds qubit q_i, so the basis state
/// |q_{n-1} ... q_0> lives at index sum(q_i * 2^i).
using StateVector = std::vector<Complex>;

/// Square row-major matrix with power-of-two dimension, same bit convention
/// as StateVector.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
        if (dim == 0 || (dim & (dim - 1)) != 0) {
            throw std::invalid_argument("matrix dimension must be a power of two");
        }
    }
    DenseMatrix(std::size_t dim, std::initializer_list<Complex> row_major) : DenseMatrix(dim) {
        if (row_major.size() != dim * dim) {
            throw std::invalid_argument("matrix initializer has wrong size");
        }
        std::size_t i = 0;
        for (Complex c : row_major) {
            data_[i++] = c;
        }
    }

    static DenseMatrix identity(std::size_t dim) {
        DenseMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    std::size_t dim() const {
        return dim_;
    }
    Complex &operator()(std::size_t row, std::size_t col) {
        return data_[row * dim_ + col];
    }
    Complex operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }
    std::span<const Complex> data() const {
        return data_;
    }

    DenseMatrix operator*(const DenseMatrix &rhs) const;
    DenseMatrix operator+(const DenseMatrix &rhs) const;
    DenseMatrix adjoint() const;
    /// Kronecker product; *this occupies the high-order index bits.
    DenseMatrix kron(const DenseMatrix &lower) const;

    /// Largest absolute entry-wise difference.
    double max_abs_diff(const DenseMatrix &other) const;
    bool is_zero(double tol) const;

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);
/// Euclidean norm.
double norm2(std::span<const Complex> v);
/// Returns sum(conj(a_i) * b_i).
Complex dot(std::span<const Complex> a, std::span<const Complex> b);
/// Returns a (x) b with a on the high-order bits.
StateVector kron(std::span<const Complex> upper, std::span<const Complex> lower);

}  // namespace sfdd

#endif
