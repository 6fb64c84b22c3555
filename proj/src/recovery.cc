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

#include "qrecover/recovery.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qrecover/errors.h"
#include "qrecover/factorizations.h"

namespace qrecover {

namespace {

void require_output_dim(const RecoveryPlan &plan, const ComplexMatrix &m, const char *op) {
    if (!m.is_square() || m.rows() != plan.ambient_dim()) {
        throw DimensionError(
            std::string(op) + ": input is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
            ", plan dimension is " + std::to_string(plan.ambient_dim()));
    }
}

ComplexMatrix leading_block(const RecoveryPlan &plan, const ComplexMatrix &conjugated) {
    const size_t qk = plan.q * plan.code_dim();
    return conjugated.block(0, 0, qk, qk);
}

}  // namespace

std::vector<ComplexMatrix> rotate_kraus(const QuantumChannel &phi, const ComplexMatrix &rotation, double tol) {
    const size_t r = phi.size();
    if (!rotation.is_square() || rotation.rows() != r) {
        throw DimensionError(
            "rotate_kraus: rotation is " + std::to_string(rotation.rows()) + "x" + std::to_string(rotation.cols()) +
            " for " + std::to_string(r) + " Kraus operators");
    }
    double defect = isometry_defect(rotation);
    if (defect > tol * std::sqrt(static_cast<double>(r))) {
        throw NotUnitaryError("rotate_kraus: ||U^dag U - I||_F = " + std::to_string(defect), defect);
    }
    std::vector<ComplexMatrix> out;
    out.reserve(r);
    for (size_t j = 0; j < r; j++) {
        ComplexMatrix f(phi.dim(), phi.dim());
        for (size_t i = 0; i < r; i++) {
            if (rotation(i, j) != Complex{}) {
                f += phi[i] * rotation(i, j);
            }
        }
        out.push_back(std::move(f));
    }
    return out;
}

RecoveryPlan build_recovery(
    const QuantumChannel &phi, const CodeIsometry &code, const KLReport &report, const Tolerances &tol) {
    if (!report.correctable || !report.spectrum) {
        throw NotCorrectableError(
            "build_recovery: code is not correctable (relative KL residual " +
                std::to_string(report.relative_residual) + ")",
            report.relative_residual);
    }
    if (report.ambient_dim != phi.dim() || report.code_dim != code.code_dim() ||
        code.ambient_dim() != phi.dim() || report.lambda.rows() != phi.size()) {
        throw DimensionError("build_recovery: report does not match the channel and code");
    }
    const auto &spectrum = *report.spectrum;
    const size_t n = phi.dim();
    const size_t k = code.code_dim();
    const size_t q = spectrum.q;
    if (q * k > n) {
        throw NotCorrectableError(
            "build_recovery: rank " + std::to_string(q) + " times code dimension exceeds " + std::to_string(n),
            report.relative_residual);
    }

    auto rotated = rotate_kraus(phi, spectrum.rotation, tol.factorization);
    auto xi_inv_sqrt = hermitian_power(hermitian_eig(spectrum.xi, tol.factorization), -0.5);

    ComplexMatrix stacked(n, q * k);
    for (size_t j = 0; j < q; j++) {
        auto fw = rotated[j] * code.w();
        for (size_t r = 0; r < n; r++) {
            for (size_t c = 0; c < k; c++) {
                stacked(r, j * k + c) = fw(r, c);
            }
        }
    }
    auto r1 = stacked * kron(xi_inv_sqrt, ComplexMatrix::identity(k));
    auto r = complete_to_unitary(r1, tol.isometry);

    return RecoveryPlan{
        .r_unitary = std::move(r),
        .xi = spectrum.xi,
        .q = q,
        .code = code,
        .rotated_kraus = std::move(rotated),
        .gamma = spectrum.gamma,
    };
}

ComplexMatrix conjugate_output(const RecoveryPlan &plan, const ComplexMatrix &phi_output) {
    require_output_dim(plan, phi_output, "conjugate_output");
    return dagger(plan.r_unitary) * phi_output * plan.r_unitary;
}

RecoveredState recover(const RecoveryPlan &plan, const ComplexMatrix &phi_output) {
    require_output_dim(plan, phi_output, "recover");
    auto conjugated = conjugate_output(plan, phi_output);
    const size_t qk = plan.q * plan.code_dim();
    double outside = 0;
    for (size_t r = 0; r < conjugated.rows(); r++) {
        for (size_t c = 0; c < conjugated.cols(); c++) {
            if (r >= qk || c >= qk) {
                outside += std::norm(conjugated(r, c));
            }
        }
    }
    auto data = partial_trace_first(leading_block(plan, conjugated), plan.q, plan.code_dim());
    data *= Complex(1.0 / plan.gamma);
    return {std::move(data), std::sqrt(outside)};
}

ComplexMatrix recover_full(const RecoveryPlan &plan, const ComplexMatrix &phi_output) {
    require_output_dim(plan, phi_output, "recover_full");
    const size_t n = plan.ambient_dim();
    const size_t k = plan.code_dim();
    auto conjugated = conjugate_output(plan, phi_output);
    // With k | n the ancilla factor is all of M_{n/k}; otherwise only the leading
    // qk x qk block carries a tensor structure.
    auto data = n % k == 0 ? partial_trace_first(conjugated, n / k, k)
                           : partial_trace_first(leading_block(plan, conjugated), plan.q, k);
    return plan.code.w() * data * dagger(plan.code.w());
}

PlanExtension extend_plan(const RecoveryPlan &plan, const QuantumChannel &new_phi, const Tolerances &tol) {
    if (new_phi.dim() != plan.ambient_dim()) {
        throw DimensionError(
            "extend_plan: channel dimension " + std::to_string(new_phi.dim()) + " differs from plan dimension " +
            std::to_string(plan.ambient_dim()));
    }
    const size_t q = plan.q;
    const size_t s = new_phi.size();
    const auto &w = plan.code.w();

    std::vector<ComplexMatrix> basis;
    basis.reserve(q);
    for (size_t i = 0; i < q; i++) {
        basis.push_back(plan.rotated_kraus[i] * w);
    }
    // Gram matrix of the basis; equals k * xi up to roundoff.
    ComplexMatrix gram(q, q);
    for (size_t i = 0; i < q; i++) {
        for (size_t l = 0; l < q; l++) {
            gram(i, l) = inner_product(basis[i], basis[l]);
        }
    }
    auto gram_inv = hermitian_power(hermitian_eig(gram, tol.factorization), -1.0);

    ComplexMatrix coeffs(q, s);
    double worst_defect = 0;
    double scale = 0;
    for (size_t j = 0; j < s; j++) {
        auto target = new_phi[j] * w;
        scale = std::max(scale, frobenius_norm(target));
        ComplexMatrix rhs(q, 1);
        for (size_t i = 0; i < q; i++) {
            rhs(i, 0) = inner_product(basis[i], target);
        }
        auto t = gram_inv * rhs;
        ComplexMatrix fitted(target.rows(), target.cols());
        for (size_t i = 0; i < q; i++) {
            coeffs(i, j) = t(i, 0);
            fitted += basis[i] * t(i, 0);
        }
        worst_defect = std::max(worst_defect, frobenius_distance(target, fitted));
    }
    double residual = scale == 0 ? 0 : worst_defect / scale;
    if (residual > tol.span) {
        throw SpanMembershipError(
            "extend_plan: new Kraus operators leave the plan's span on the code (relative residual " +
                std::to_string(residual) + ")",
            residual);
    }

    auto xi_sqrt = hermitian_power(hermitian_eig(plan.xi, tol.factorization), 0.5);
    auto xi_tilde = xi_sqrt * coeffs * dagger(coeffs) * xi_sqrt;
    return {std::move(xi_tilde), std::move(coeffs), residual};
}

}  // namespace qrecover
