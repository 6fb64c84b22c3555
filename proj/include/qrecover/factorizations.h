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

#ifndef QRECOVER_FACTORIZATIONS_H
#define QRECOVER_FACTORIZATIONS_H

#include <vector>

#include "qrecover/matrix.h"

namespace qrecover {

struct HermitianEigen {
    /// Sorted descending.
    std::vector<double> eigenvalues;
    /// Unitary; column j is the eigenvector for eigenvalues[j]. Each column is
    /// phase-fixed so that its largest-magnitude entry is real and positive.
    ComplexMatrix eigenvectors;
};

/// Relative anti-Hermitian part ||h - h^dagger||_F / ||h||_F (0 for the zero matrix).
double hermiticity_defect(const ComplexMatrix &h);

/// Spectral decomposition of a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Input must satisfy ||h - h^dagger||_F <= tol * ||h||_F, otherwise NotHermitianError.
/// The Hermitian part (h + h^dagger) / 2 is what gets decomposed. Entries that are
/// already exactly zero are never rotated, so a diagonal input yields a permutation of
/// the identity. Ties in eigenvalues keep their original relative order.
HermitianEigen hermitian_eig(const ComplexMatrix &h, double tol = 1e-10);

/// V diag(f(lambda)) V^dagger for f(x) = x^exponent. Requires strictly positive
/// eigenvalues when exponent < 0 (SingularAncillaError otherwise).
ComplexMatrix hermitian_power(const HermitianEigen &eig, double exponent);

/// ||a^dagger a - I||_F.
double isometry_defect(const ComplexMatrix &a);

/// Extends a matrix with orthonormal columns to a square unitary.
///
/// The leading columns of the result are copied from r1 bit for bit. The remaining
/// columns come from Gram-Schmidt (with one re-orthogonalization pass) applied to
/// standard basis vectors, pivoting on the candidate with the largest residual norm.
/// Throws NotIsometryError when ||r1^dagger r1 - I||_F > tol.
ComplexMatrix complete_to_unitary(const ComplexMatrix &r1, double tol = 1e-10);

/// Orthonormalizes the columns of a full-column-rank matrix (modified Gram-Schmidt,
/// twice). Used to draw Haar-like isometries from Gaussian samples.
ComplexMatrix orthonormalize_columns(const ComplexMatrix &a);

}  // namespace qrecover

#endif
