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

#include "sfdd/linalg.h"

#include <algorithm>
#include <cmath>

namespace sfdd {

DenseMatrix DenseMatrix::operator*(const DenseMatrix &rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            Complex a = (*this)(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix &rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    DenseMatrix out(dim_);
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] = data_[i] + rhs.data_[i];
    }
    return out;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

DenseMatrix DenseMatrix::kron(const DenseMatrix &lower) const {
    std::size_t d = lower.dim_;
    DenseMatrix out(dim_ * d);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            for (std::size_t lr = 0; lr < d; ++lr) {
                for (std::size_t lc = 0; lc < d; ++lc) {
                    out(r * d + lr, c * d + lc) = (*this)(r, c) * lower(lr, lc);
                }
            }
        }
    }
    return out;
}

double DenseMatrix::max_abs_diff(const DenseMatrix &other) const {
    if (dim_ != other.dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    return sfdd::max_abs_diff(data_, other.data_);
}

bool DenseMatrix::is_zero(double tol) const {
    return std::all_of(data_.begin(), data_.end(), [tol](Complex c) { return std::abs(c) <= tol; });
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("vector length mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

double norm2(std::span<const Complex> v) {
    double s = 0.0;
    for (Complex c : v) {
        s += std::norm(c);
    }
    return std::sqrt(s);
}

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("vector length mismatch");
    }
    Complex s{};
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

StateVector kron(std::span<const Complex> upper, std::span<const Complex> lower) {
    StateVector out(upper.size() * lower.size());
    for (std::size_t u = 0; u < upper.size(); ++u) {
        for (std::size_t l = 0; l < lower.size(); ++l) {
            out[u * lower.size() + l] = upper[u] * lower[l];
        }
    }
    return out;
}

}  // namespace sfdd
