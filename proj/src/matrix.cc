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

#include "qrecover/matrix.h"

#include <cmath>
#include <sstream>

#include "qrecover/errors.h"

namespace qrecover {

namespace {

std::string shape(const ComplexMatrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch " + shape(a) + " vs " + shape(b));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw DimensionError(
            "ComplexMatrix: " + std::to_string(entries_.size()) + " entries for shape " + std::to_string(rows) + "x" +
            std::to_string(cols));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw DimensionError("ComplexMatrix: ragged initializer list");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::zeros(size_t rows, size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (size_t i = 0; i < diag.size(); i++) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (size_t i = 0; i < diag.size(); i++) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> entries) {
    return ComplexMatrix(entries.size(), 1, std::vector<Complex>(entries.begin(), entries.end()));
}

const Complex &ComplexMatrix::at(size_t r, size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw DimensionError("ComplexMatrix::at: index out of range for " + shape(*this));
    }
    return (*this)(r, c);
}

ComplexMatrix ComplexMatrix::col(size_t c) const {
    ComplexMatrix v(rows_, 1);
    for (size_t r = 0; r < rows_; r++) {
        v(r, 0) = (*this)(r, c);
    }
    return v;
}

void ComplexMatrix::set_col(size_t c, const ComplexMatrix &v) {
    if (v.rows() != rows_ || v.cols() != 1 || c >= cols_) {
        throw DimensionError("ComplexMatrix::set_col: bad column " + shape(v) + " for " + shape(*this));
    }
    for (size_t r = 0; r < rows_; r++) {
        (*this)(r, c) = v(r, 0);
    }
}

ComplexMatrix ComplexMatrix::block(size_t r0, size_t c0, size_t nrows, size_t ncols) const {
    if (r0 + nrows > rows_ || c0 + ncols > cols_) {
        throw DimensionError("ComplexMatrix::block: block exceeds " + shape(*this));
    }
    ComplexMatrix b(nrows, ncols);
    for (size_t r = 0; r < nrows; r++) {
        for (size_t c = 0; c < ncols; c++) {
            b(r, c) = (*this)(r0 + r, c0 + c);
        }
    }
    return b;
}

ComplexMatrix ComplexMatrix::leading_cols(size_t ncols) const {
    return block(0, 0, rows_, ncols);
}

bool ComplexMatrix::all_finite() const noexcept {
    for (const auto &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+");
    for (size_t i = 0; i < entries_.size(); i++) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-");
    for (size_t i = 0; i < entries_.size(); i++) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

std::string ComplexMatrix::str() const {
    std::stringstream ss;
    ss.precision(6);
    for (size_t r = 0; r < rows_; r++) {
        ss << (r == 0 ? "[" : " ");
        for (size_t c = 0; c < cols_; c++) {
            const auto &z = (*this)(r, c);
            ss << (c == 0 ? "" : ", ") << z.real();
            if (z.imag() != 0) {
                ss << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
            }
        }
        ss << (r + 1 == rows_ ? "]" : "\n");
    }
    return ss.str();
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(ComplexMatrix a, Complex scale) {
    a *= scale;
    return a;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix a) {
    a *= scale;
    return a;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: inner dimensions differ, " + shape(a) + " * " + shape(b));
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t l = 0; l < a.cols(); l++) {
            const Complex x = a(i, l);
            if (x == Complex{}) {
                continue;
            }
            for (size_t j = 0; j < b.cols(); j++) {
                out(i, j) += x * b(l, j);
            }
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        for (size_t j = 0; j < a.cols(); j++) {
            const Complex x = a(i, j);
            if (x == Complex{}) {
                continue;
            }
            for (size_t r = 0; r < b.rows(); r++) {
                for (size_t c = 0; c < b.cols(); c++) {
                    out(i * b.rows() + r, j * b.cols() + c) = x * b(r, c);
                }
            }
        }
    }
    return out;
}

ComplexMatrix direct_sum(const ComplexMatrix &a, size_t zero_dim) {
    if (!a.is_square()) {
        throw DimensionError("direct_sum: expected a square matrix, got " + shape(a));
    }
    const size_t n = a.rows() + zero_dim;
    ComplexMatrix out(n, n);
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) = a(r, c);
        }
    }
    return out;
}

ComplexMatrix partial_trace_first(const ComplexMatrix &m, size_t dim_first, size_t dim_second) {
    if (!m.is_square() || m.rows() != dim_first * dim_second) {
        throw DimensionError(
            "partial_trace_first: " + shape(m) + " is not square of size " + std::to_string(dim_first) + "*" +
            std::to_string(dim_second));
    }
    ComplexMatrix out(dim_second, dim_second);
    for (size_t a = 0; a < dim_first; a++) {
        for (size_t i = 0; i < dim_second; i++) {
            for (size_t j = 0; j < dim_second; j++) {
                out(i, j) += m(a * dim_second + i, a * dim_second + j);
            }
        }
    }
    return out;
}

Complex trace(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw DimensionError("trace: expected a square matrix, got " + shape(m));
    }
    Complex t{};
    for (size_t i = 0; i < m.rows(); i++) {
        t += m(i, i);
    }
    return t;
}

double frobenius_norm(const ComplexMatrix &m) {
    double s = 0;
    for (const auto &z : m.entries()) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

double frobenius_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "frobenius_distance");
    double s = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t i = 0; i < ea.size(); i++) {
        s += std::norm(ea[i] - eb[i]);
    }
    return std::sqrt(s);
}

Complex inner_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "inner_product");
    Complex s{};
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t i = 0; i < ea.size(); i++) {
        s += std::conj(ea[i]) * eb[i];
    }
    return s;
}

}  // namespace qrecover
