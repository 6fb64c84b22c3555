// Copyright 2026 The qrecover Authors
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

#ifndef QRECOVER_MATRIX_H
#define QRECOVER_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace qrecover {

using Complex = std::complex<double>;

/// Dense rows x cols matrix of complex doubles stored in row-major order.
///
/// This is the carrier for every object in the library: density matrices, Kraus
/// operators, code isometries and recovery unitaries. It is a plain value type.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(size_t rows, size_t cols);
    ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(size_t n);
    static ComplexMatrix zeros(size_t rows, size_t cols);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    static ComplexMatrix diagonal(std::span<const double> diag);
    /// Column vector from entries.
    static ComplexMatrix column(std::span<const Complex> entries);

    size_t rows() const noexcept {
        return rows_;
    }
    size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }
    bool empty() const noexcept {
        return entries_.empty();
    }

    Complex &operator()(size_t r, size_t c) {
        return entries_[r * cols_ + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }
    /// Bounds-checked access.
    const Complex &at(size_t r, size_t c) const;

    std::span<const Complex> entries() const noexcept {
        return entries_;
    }
    std::span<Complex> entries() noexcept {
        return entries_;
    }

    ComplexMatrix col(size_t c) const;
    void set_col(size_t c, const ComplexMatrix &v);
    /// Copy of the sub-block starting at (r0, c0).
    ComplexMatrix block(size_t r0, size_t c0, size_t nrows, size_t ncols) const;
    /// Copy of the first ncols columns.
    ComplexMatrix leading_cols(size_t ncols) const;

    bool all_finite() const noexcept;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    bool operator==(const ComplexMatrix &other) const = default;

    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);

/// Standard matrix product. Throws DimensionError if a.cols() != b.rows().
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
inline ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    return matmul(a, b);
}

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix &a);

/// Kronecker product. Block (i, j) of the result is a(i, j) * b, so the first
/// factor is the slow index.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// [[a, 0], [0, 0_{zero_dim}]].
ComplexMatrix direct_sum(const ComplexMatrix &a, size_t zero_dim);

/// Traces out the first tensor factor of a (dim_first * dim_second)-square matrix
/// using the same index convention as kron.
ComplexMatrix partial_trace_first(const ComplexMatrix &m, size_t dim_first, size_t dim_second);

Complex trace(const ComplexMatrix &m);
double frobenius_norm(const ComplexMatrix &m);
/// Frobenius norm of a - b without allocating.
double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b);
/// Frobenius inner product tr(a^dagger b).
Complex inner_product(const ComplexMatrix &a, const ComplexMatrix &b);

}  // namespace qrecover

#endif
