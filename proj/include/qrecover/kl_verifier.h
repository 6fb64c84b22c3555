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

#ifndef QRECOVER_KL_VERIFIER_H
#define QRECOVER_KL_VERIFIER_H

#include <optional>
#include <vector>

#include "qrecover/channel.h"
#include "qrecover/matrix.h"
#include "qrecover/tolerances.h"

namespace qrecover {

/// The r x r Knill-Laflamme Gram matrix together with how well each block fits.
struct LambdaEstimate {
    /// lambda(i, j) = tr(W^dag F_i^dag F_j W) / k.
    ComplexMatrix lambda;
    /// pair_residuals[i][j] = ||W^dag F_i^dag F_j W - lambda(i, j) I_k||_F.
    std::vector<std::vector<double>> pair_residuals;
    /// Maximum over all pairs.
    double residual = 0;
};

/// Spectral data of the Gram matrix used by the recovery construction.
struct KLSpectrum {
    /// r x r unitary U with U^dag Lambda U = xi (+) 0.
    ComplexMatrix rotation;
    /// All r eigenvalues of Lambda, descending.
    std::vector<double> eigenvalues;
    /// q x q positive definite ancilla state (diagonal in the rotated basis).
    ComplexMatrix xi;
    size_t q = 0;
    /// tr xi. Equals 1 for trace-preserving channels.
    double gamma = 0;
};

struct KLReport {
    size_t ambient_dim = 0;
    size_t code_dim = 0;
    /// Hermitian part (Lambda + Lambda^dag) / 2 of the estimated Gram matrix.
    ComplexMatrix lambda;
    std::vector<std::vector<double>> pair_residuals;
    /// Worst absolute per-pair residual.
    double residual = 0;
    /// residual / ||Lambda||_F; this is what gets compared against tol.
    double relative_residual = 0;
    /// ||Lambda - Lambda^dag||_F before symmetrization.
    double hermiticity_residual = 0;
    double tol = 0;
    double rank_tol = 0;
    bool correctable = false;
    /// Present iff correctable.
    std::optional<KLSpectrum> spectrum;
};

/// Throws DimensionError if phi.dim() != code.ambient_dim().
LambdaEstimate compute_lambda(const QuantumChannel &phi, const CodeIsometry &code);

/// Decides the Knill-Laflamme condition. A negative verdict is reported, not thrown.
///
/// The code is declared correctable when the worst pair residual is at most
/// tol.correctable * ||Lambda||_F and Lambda is not identically zero. Eigenvalues of
/// Lambda at or below tol.rank * lambda_max count as zero when fixing the rank q.
KLReport verify_correctable(const QuantumChannel &phi, const CodeIsometry &code, const Tolerances &tol = {});

}  // namespace qrecover

#endif
