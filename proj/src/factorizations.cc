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

#include "qrecover/factorizations.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qrecover/errors.h"

namespace qrecover {

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kGramSchmidtSkip = 1e-8;

// Makes the largest-magnitude entry of column j real and positive. Near-ties resolve to
// the lowest row index so roundoff cannot flip the choice.
void fix_column_phase(ComplexMatrix &v, size_t j) {
    double largest = 0;
    for (size_t i = 0; i < v.rows(); i++) {
        largest = std::max(largest, std::abs(v(i, j)));
    }
    if (largest == 0) {
        return;
    }
    for (size_t i = 0; i < v.rows(); i++) {
        double m = std::abs(v(i, j));
        if (m >= largest * (1 - 1e-10)) {
            Complex phase = std::conj(v(i, j)) / m;
            for (size_t r = 0; r < v.rows(); r++) {
                v(r, j) *= phase;
            }
            v(i, j) = m;
            return;
        }
    }
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0;
    for (size_t p = 0; p < a.rows(); p++) {
        for (size_t q = 0; q < a.cols(); q++) {
            if (p != q) {
                s += std::norm(a(p, q));
            }
        }
    }
    return std::sqrt(s);
}

}  // namespace

double hermiticity_defect(const ComplexMatrix &h) {
    if (!h.is_square()) {
        throw DimensionError("hermiticity_defect: matrix is not square");
    }
    double norm = frobenius_norm(h);
    if (norm == 0) {
        return 0;
    }
    double s = 0;
    for (size_t r = 0; r < h.rows(); r++) {
        for (size_t c = 0; c < h.cols(); c++) {
            s += std::norm(h(r, c) - std::conj(h(c, r)));
        }
    }
    return std::sqrt(s) / norm;
}

HermitianEigen hermitian_eig(const ComplexMatrix &h, double tol) {
    if (!h.is_square()) {
        throw DimensionError("hermitian_eig: matrix is not square");
    }
    double defect = hermiticity_defect(h);
    if (defect > tol) {
        throw NotHermitianError(
            "hermitian_eig: relative anti-Hermitian part " + std::to_string(defect) + " exceeds tolerance", defect);
    }
    const size_t n = h.rows();
    ComplexMatrix a = (h + dagger(h)) * Complex(0.5);
    for (size_t i = 0; i < n; i++) {
        a(i, i) = a(i, i).real();
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double norm = frobenius_norm(a);
    const double tiny = norm * 1e-300;
    for (int sweep = 0; sweep < kMaxJacobiSweeps; sweep++) {
        double off = off_diagonal_norm(a);
        if (off <= norm * 1e-15 || off == 0) {
            break;
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                const Complex b = a(p, q);
                const double abs_b = std::abs(b);
                if (abs_b <= tiny) {
                    continue;
                }
                // Phase-rotate the (p, q) plane so the off-diagonal entry is real, then
                // apply the classic real symmetric Jacobi rotation.
                const Complex phase = b / abs_b;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2 * abs_b);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                const double c = 1 / std::sqrt(1 + t * t);
                const double s = t * c;
                const Complex jpp = c;
                const Complex jpq = s;
                const Complex jqp = -s * std::conj(phase);
                const Complex jqq = c * std::conj(phase);

                for (size_t r = 0; r < n; r++) {
                    Complex x = a(r, p);
                    Complex y = a(r, q);
                    a(r, p) = x * jpp + y * jqp;
                    a(r, q) = x * jpq + y * jqq;
                }
                for (size_t r = 0; r < n; r++) {
                    Complex x = a(p, r);
                    Complex y = a(q, r);
                    a(p, r) = std::conj(jpp) * x + std::conj(jqp) * y;
                    a(q, r) = std::conj(jpq) * x + std::conj(jqq) * y;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (size_t r = 0; r < n; r++) {
                    Complex x = v(r, p);
                    Complex y = v(r, q);
                    v(r, p) = x * jpp + y * jqp;
                    v(r, q) = x * jpq + y * jqq;
                }
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    HermitianEigen out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (size_t j = 0; j < n; j++) {
        out.eigenvalues[j] = a(order[j], order[j]).real();
        for (size_t r = 0; r < n; r++) {
            out.eigenvectors(r, j) = v(r, order[j]);
        }
        fix_column_phase(out.eigenvectors, j);
    }
    return out;
}

ComplexMatrix hermitian_power(const HermitianEigen &eig, double exponent) {
    const auto &v = eig.eigenvectors;
    const size_t n = v.rows();
    std::vector<double> f(n);
    for (size_t j = 0; j < n; j++) {
        double lambda = eig.eigenvalues[j];
        if (exponent < 0 && lambda <= 0) {
            throw SingularAncillaError(
                "hermitian_power: eigenvalue " + std::to_string(lambda) + " is not positive", lambda);
        }
        if (lambda < 0 && exponent != std::floor(exponent)) {
            throw InvalidStateError(
                "hermitian_power: negative eigenvalue " + std::to_string(lambda) + " for fractional power", lambda);
        }
        f[j] = std::pow(lambda, exponent);
    }
    ComplexMatrix scaled = v;
    for (size_t r = 0; r < n; r++) {
        for (size_t j = 0; j < n; j++) {
            scaled(r, j) *= f[j];
        }
    }
    return scaled * dagger(v);
}

double isometry_defect(const ComplexMatrix &a) {
    return frobenius_distance(dagger(a) * a, ComplexMatrix::identity(a.cols()));
}

ComplexMatrix complete_to_unitary(const ComplexMatrix &r1, double tol) {
    const size_t n = r1.rows();
    const size_t m = r1.cols();
    if (m > n) {
        throw DimensionError("complete_to_unitary: more columns than rows");
    }
    double defect = isometry_defect(r1);
    if (defect > tol) {
        throw NotIsometryError(
            "complete_to_unitary: columns are not orthonormal, ||A^dag A - I||_F = " + std::to_string(defect), defect);
    }

    ComplexMatrix u(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < m; c++) {
            u(r, c) = r1(r, c);
        }
    }
    // residual2[i] = ||e_i - Q Q^dag e_i||^2 = 1 - ||row i of Q||^2.
    std::vector<double> residual2(n, 1.0);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < m; c++) {
            residual2[r] -= std::norm(u(r, c));
        }
    }
    std::vector<bool> used(n, false);

    auto project_out = [&](std::vector<Complex> &v, size_t ncols) {
        for (size_t c = 0; c < ncols; c++) {
            Complex dot{};
            for (size_t r = 0; r < n; r++) {
                dot += std::conj(u(r, c)) * v[r];
            }
            for (size_t r = 0; r < n; r++) {
                v[r] -= dot * u(r, c);
            }
        }
    };

    for (size_t next = m; next < n; next++) {
        size_t best = n;
        for (size_t i = 0; i < n; i++) {
            if (!used[i] && (best == n || residual2[i] > residual2[best])) {
                best = i;
            }
        }
        if (best == n || residual2[best] < kGramSchmidtSkip * kGramSchmidtSkip) {
            throw Error("complete_to_unitary: no standard basis vector left outside the span");
        }
        used[best] = true;

        std::vector<Complex> v(n);
        v[best] = 1.0;
        project_out(v, next);
        project_out(v, next);
        double norm = 0;
        for (const auto &z : v) {
            norm += std::norm(z);
        }
        norm = std::sqrt(norm);
        if (norm < kGramSchmidtSkip) {
            throw Error("complete_to_unitary: candidate collapsed during orthogonalization");
        }
        for (size_t r = 0; r < n; r++) {
            u(r, next) = v[r] / norm;
            residual2[r] -= std::norm(u(r, next));
        }
    }
    return u;
}

ComplexMatrix orthonormalize_columns(const ComplexMatrix &a) {
    ComplexMatrix q = a;
    const size_t n = a.rows();
    for (size_t j = 0; j < a.cols(); j++) {
        double original = frobenius_norm(a.col(j));
        for (int pass = 0; pass < 2; pass++) {
            for (size_t c = 0; c < j; c++) {
                Complex dot{};
                for (size_t r = 0; r < n; r++) {
                    dot += std::conj(q(r, c)) * q(r, j);
                }
                for (size_t r = 0; r < n; r++) {
                    q(r, j) -= dot * q(r, c);
                }
            }
        }
        double norm = frobenius_norm(q.col(j));
        if (norm <= 1e-12 * original || norm == 0) {
            throw DimensionError("orthonormalize_columns: columns are linearly dependent");
        }
        for (size_t r = 0; r < n; r++) {
            q(r, j) /= norm;
        }
    }
    return q;
}

}  // namespace qrecover
