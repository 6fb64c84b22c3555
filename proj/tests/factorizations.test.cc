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

#include <gtest/gtest.h>

#include <numbers>

#include "qrecover/errors.h"
#include "qrecover/random.h"
#include "test_util.h"

using namespace qrecover;

namespace {

const Complex kI(0, 1);

ComplexMatrix reconstruct(const HermitianEigen &eig) {
    return eig.eigenvectors * ComplexMatrix::diagonal(std::span<const double>(eig.eigenvalues)) *
           dagger(eig.eigenvectors);
}

}  // namespace

TEST(hermitian_eig, diagonal_input_keeps_basis) {
    std::vector<double> p = {0.4, 0.3, 0.2, 0.1};
    auto eig = hermitian_eig(ComplexMatrix::diagonal(std::span<const double>(p)));
    ASSERT_EQ(eig.eigenvalues, p);
    ASSERT_EQ(eig.eigenvectors, ComplexMatrix::identity(4));
}

TEST(hermitian_eig, diagonal_input_is_sorted_descending) {
    std::vector<double> p = {0.1, 0.4, 0.2, 0.3};
    auto eig = hermitian_eig(ComplexMatrix::diagonal(std::span<const double>(p)));
    ASSERT_EQ(eig.eigenvalues, (std::vector<double>{0.4, 0.3, 0.2, 0.1}));
    // Column j is the standard basis vector of the j-th largest entry.
    const size_t source[] = {1, 3, 2, 0};
    for (size_t j = 0; j < 4; j++) {
        ASSERT_EQ(eig.eigenvectors.col(j), ComplexMatrix::identity(4).col(source[j]));
    }
}

TEST(hermitian_eig, degenerate_half_identity) {
    auto eig = hermitian_eig(ComplexMatrix::identity(2) * Complex(0.5));
    ASSERT_EQ(eig.eigenvalues, (std::vector<double>{0.5, 0.5}));
    ASSERT_EQ(eig.eigenvectors, ComplexMatrix::identity(2));
}

TEST(hermitian_eig, two_by_two_closed_form) {
    auto eig = hermitian_eig({{2, 1}, {1, 2}});
    ASSERT_NEAR(eig.eigenvalues[0], 3, 1e-14);
    ASSERT_NEAR(eig.eigenvalues[1], 1, 1e-14);
    const double h = 1 / std::numbers::sqrt2;
    // Phase convention: first largest-magnitude entry is real positive.
    EXPECT_MATRIX_NEAR(eig.eigenvectors, ComplexMatrix({{h, h}, {h, -h}}), 1e-14);
}

TEST(hermitian_eig, complex_two_by_two) {
    // [[1, i], [-i, 1]] has eigenvalues 2 and 0.
    auto eig = hermitian_eig({{1, kI}, {-kI, 1}});
    ASSERT_NEAR(eig.eigenvalues[0], 2, 1e-14);
    ASSERT_NEAR(eig.eigenvalues[1], 0, 1e-14);
    EXPECT_MATRIX_NEAR(reconstruct(eig), ComplexMatrix({{1, kI}, {-kI, 1}}), 1e-14);
}

TEST(hermitian_eig, rejects_non_hermitian) {
    ASSERT_THROW(hermitian_eig({{1, 1}, {0, 1}}), NotHermitianError);
    ASSERT_THROW(hermitian_eig(ComplexMatrix(2, 3)), DimensionError);
    try {
        hermitian_eig({{0, 1}, {0, 0}});
        FAIL();
    } catch (const NotHermitianError &e) {
        ASSERT_NEAR(e.residual(), 1.0 * std::numbers::sqrt2, 1e-14);
    }
}

TEST(hermitian_eig, zero_matrix) {
    auto eig = hermitian_eig(ComplexMatrix(3, 3));
    ASSERT_EQ(eig.eigenvalues, (std::vector<double>{0, 0, 0}));
    ASSERT_EQ(eig.eigenvectors, ComplexMatrix::identity(3));
}

TEST(hermitian_eig_properties, reconstruction_and_unitarity) {
    Rng rng(21);
    for (size_t n : {1, 2, 3, 5, 8, 13, 32, 64}) {
        auto h = random_hermitian(n, rng);
        auto eig = hermitian_eig(h);
        EXPECT_LE(frobenius_distance(reconstruct(eig), h), 1e-10 * frobenius_norm(h)) << "n=" << n;
        EXPECT_LE(isometry_defect(eig.eigenvectors), 1e-10) << "n=" << n;
        for (size_t j = 0; j + 1 < n; j++) {
            EXPECT_GE(eig.eigenvalues[j], eig.eigenvalues[j + 1]);
        }
    }
}

TEST(hermitian_eig_properties, phase_convention) {
    Rng rng(22);
    for (size_t trial = 0; trial < 10; trial++) {
        auto eig = hermitian_eig(random_hermitian(6, rng));
        for (size_t j = 0; j < 6; j++) {
            double largest = 0;
            for (size_t r = 0; r < 6; r++) {
                largest = std::max(largest, std::abs(eig.eigenvectors(r, j)));
            }
            for (size_t r = 0; r < 6; r++) {
                if (std::abs(eig.eigenvectors(r, j)) >= largest * (1 - 1e-10)) {
                    ASSERT_EQ(eig.eigenvectors(r, j).imag(), 0.0);
                    ASSERT_GT(eig.eigenvectors(r, j).real(), 0.0);
                    break;
                }
            }
        }
    }
}

TEST(hermitian_eig_properties, deterministic) {
    Rng a(23);
    Rng b(23);
    auto h1 = random_hermitian(10, a);
    auto h2 = random_hermitian(10, b);
    auto e1 = hermitian_eig(h1);
    auto e2 = hermitian_eig(h2);
    ASSERT_EQ(e1.eigenvalues, e2.eigenvalues);
    ASSERT_EQ(e1.eigenvectors, e2.eigenvectors);
}

TEST(hermitian_power, square_root_and_inverse) {
    Rng rng(24);
    auto g = random_gaussian_matrix(5, 5, rng);
    auto pd = g * dagger(g) + ComplexMatrix::identity(5);
    auto eig = hermitian_eig(pd);
    auto root = hermitian_power(eig, 0.5);
    EXPECT_MATRIX_NEAR(root * root, pd, 1e-12 * frobenius_norm(pd));
    auto inv_root = hermitian_power(eig, -0.5);
    EXPECT_MATRIX_NEAR(inv_root * root, ComplexMatrix::identity(5), 1e-12);

    auto singular = hermitian_eig(ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0}));
    ASSERT_THROW(hermitian_power(singular, -0.5), SingularAncillaError);
}

TEST(complete_to_unitary, square_unitary_is_unchanged) {
    Rng rng(31);
    auto u = random_unitary(5, rng);
    ASSERT_EQ(complete_to_unitary(u), u);
}

TEST(complete_to_unitary, single_basis_column) {
    ComplexMatrix e0 = {{1}, {0}, {0}};
    auto u = complete_to_unitary(e0);
    ASSERT_EQ(u.rows(), 3u);
    ASSERT_EQ(u.col(0), e0);
    EXPECT_LE(isometry_defect(u), 1e-15);
}

TEST(complete_to_unitary, example1_code_by_hand) {
    const double h = 1 / std::numbers::sqrt2;
    ComplexMatrix w = {{h, 0}, {h, 0}, {0, h}, {0, h}};
    // Pivoted Gram-Schmidt picks e_0 then e_2:
    // e_0 - P e_0 = (1/2, -1/2, 0, 0), e_2 - P e_2 = (0, 0, 1/2, -1/2).
    ComplexMatrix expected = {{h, 0, h, 0}, {h, 0, -h, 0}, {0, h, 0, h}, {0, h, 0, -h}};
    auto u = complete_to_unitary(w);
    EXPECT_MATRIX_NEAR(u, expected, 1e-15);
    EXPECT_LE(isometry_defect(u), 1e-15);
}

TEST(complete_to_unitary, rejects_non_orthonormal_columns) {
    ComplexMatrix bad = {{1, 1}, {0, 1}, {0, 0}};
    ASSERT_THROW(complete_to_unitary(bad), NotIsometryError);
    ASSERT_THROW(complete_to_unitary(ComplexMatrix(2, 3)), DimensionError);
}

TEST(complete_to_unitary_properties, random_isometries) {
    Rng rng(32);
    for (size_t n : {2, 4, 7, 16, 40}) {
        for (size_t m : {size_t{1}, n / 2, n - 1}) {
            if (m == 0) {
                continue;
            }
            auto a = random_isometry(n, m, rng);
            auto u = complete_to_unitary(a);
            EXPECT_LE(isometry_defect(u), 1e-10) << "n=" << n << " m=" << m;
            EXPECT_EQ(u.leading_cols(m), a);
        }
    }
}

TEST(orthonormalize_columns, rejects_dependent_columns) {
    ComplexMatrix dependent = {{1, 2}, {1, 2}};
    ASSERT_THROW(orthonormalize_columns(dependent), DimensionError);
}
