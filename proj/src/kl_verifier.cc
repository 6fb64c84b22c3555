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

#include "qrecover/kl_verifier.h"

#include <algorithm>
#include <string>

#include "qrecover/errors.h"
#include "qrecover/factorizations.h"

namespace qrecover {

LambdaEstimate compute_lambda(const QuantumChannel &phi, const CodeIsometry &code) {
    if (phi.dim() != code.ambient_dim()) {
        throw DimensionError(
            "compute_lambda: channel dimension " + std::to_string(phi.dim()) + " differs from code ambient dimension " +
            std::to_string(code.ambient_dim()));
    }
    const size_t r = phi.size();
    const size_t k = code.code_dim();
    const auto identity_k = ComplexMatrix::identity(k);

    std::vector<ComplexMatrix> on_code;
    on_code.reserve(r);
    for (const auto &f : phi.kraus()) {
        on_code.push_back(f * code.w());
    }

    LambdaEstimate out;
    out.lambda = ComplexMatrix(r, r);
    out.pair_residuals.assign(r, std::vector<double>(r, 0.0));
    for (size_t i = 0; i < r; i++) {
        auto bi_dag = dagger(on_code[i]);
        for (size_t j = 0; j < r; j++) {
            auto block = bi_dag * on_code[j];
            Complex lambda = trace(block) / static_cast<double>(k);
            out.lambda(i, j) = lambda;
            double res = frobenius_distance(block, identity_k * lambda);
            out.pair_residuals[i][j] = res;
            out.residual = std::max(out.residual, res);
        }
    }
    return out;
}

KLReport verify_correctable(const QuantumChannel &phi, const CodeIsometry &code, const Tolerances &tol) {
    auto estimate = compute_lambda(phi, code);

    KLReport report;
    report.ambient_dim = code.ambient_dim();
    report.code_dim = code.code_dim();
    report.hermiticity_residual = frobenius_distance(estimate.lambda, dagger(estimate.lambda));
    report.lambda = (estimate.lambda + dagger(estimate.lambda)) * Complex(0.5);
    report.pair_residuals = std::move(estimate.pair_residuals);
    report.residual = estimate.residual;
    report.tol = tol.correctable;
    report.rank_tol = tol.rank;

    double scale = frobenius_norm(report.lambda);
    if (scale == 0) {
        // The channel annihilates the code; no positive gamma exists.
        report.relative_residual = report.residual == 0 ? 0 : 1;
        report.correctable = false;
        return report;
    }
    report.relative_residual = report.residual / scale;
    report.correctable = report.relative_residual <= tol.correctable;
    if (!report.correctable) {
        return report;
    }

    auto eig = hermitian_eig(report.lambda, tol.factorization);
    const double cutoff = tol.rank * eig.eigenvalues.front();
    size_t q = 0;
    while (q < eig.eigenvalues.size() && eig.eigenvalues[q] > cutoff) {
        q++;
    }
    if (q == 0) {
        report.correctable = false;
        return report;
    }

    KLSpectrum spectrum;
    spectrum.rotation = std::move(eig.eigenvectors);
    spectrum.eigenvalues = eig.eigenvalues;
    spectrum.q = q;
    spectrum.xi = ComplexMatrix::diagonal(std::span<const double>(eig.eigenvalues.data(), q));
    for (size_t j = 0; j < q; j++) {
        spectrum.gamma += eig.eigenvalues[j];
    }
    report.spectrum = std::move(spectrum);
    return report;
}

}  // namespace qrecover
