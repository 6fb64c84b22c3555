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

#include "qrecover/random.h"

#include <cmath>
#include <numbers>

#include "qrecover/factorizations.h"

namespace qrecover {

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = 0;
    while (u1 == 0) {
        u1 = uniform();
    }
    double u2 = uniform();
    double radius = std::sqrt(-2 * std::log(u1));
    double angle = 2 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
    double re = normal();
    double im = normal();
    return Complex(re, im) * std::numbers::sqrt2 * 0.5;
}

ComplexMatrix random_gaussian_matrix(size_t rows, size_t cols, Rng &rng) {
    ComplexMatrix m(rows, cols);
    for (auto &z : m.entries()) {
        z = rng.complex_normal();
    }
    return m;
}

ComplexMatrix random_isometry(size_t n, size_t m, Rng &rng) {
    return orthonormalize_columns(random_gaussian_matrix(n, m, rng));
}

ComplexMatrix random_unitary(size_t n, Rng &rng) {
    return random_isometry(n, n, rng);
}

ComplexMatrix random_hermitian(size_t n, Rng &rng) {
    auto g = random_gaussian_matrix(n, n, rng);
    return (g + dagger(g)) * Complex(0.5);
}

DensityMatrix random_pure_state(size_t k, Rng &rng) {
    auto psi = random_isometry(k, 1, rng);
    return DensityMatrix(psi * dagger(psi));
}

DensityMatrix random_mixed_state(size_t k, Rng &rng) {
    auto g = random_gaussian_matrix(k, k, rng);
    auto m = g * dagger(g);
    m *= Complex(1.0 / trace(m).real());
    // Exact Hermitian symmetry so validation never trips on roundoff.
    m = (m + dagger(m)) * Complex(0.5);
    return DensityMatrix(std::move(m));
}

}  // namespace qrecover
