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

#include "qrecover/channel.h"

#include <algorithm>
#include <string>

#include "qrecover/errors.h"
#include "qrecover/factorizations.h"

namespace qrecover {

QuantumChannel::QuantumChannel(std::vector<ComplexMatrix> kraus) : dim_(0), kraus_(std::move(kraus)) {
    if (kraus_.empty()) {
        throw DimensionError("QuantumChannel: Kraus list is empty");
    }
    dim_ = kraus_.front().rows();
    for (size_t j = 0; j < kraus_.size(); j++) {
        const auto &f = kraus_[j];
        if (!f.is_square() || f.rows() != dim_) {
            throw DimensionError(
                "QuantumChannel: Kraus operator " + std::to_string(j) + " is " + std::to_string(f.rows()) + "x" +
                std::to_string(f.cols()) + ", expected " + std::to_string(dim_) + "x" + std::to_string(dim_));
        }
        if (!f.all_finite()) {
            throw InvalidArgumentError("QuantumChannel: Kraus operator " + std::to_string(j) + " has non-finite entries");
        }
    }
    if (dim_ == 0) {
        throw DimensionError("QuantumChannel: dimension must be positive");
    }
}

CodeIsometry::CodeIsometry(ComplexMatrix w, double tol) : w_(std::move(w)) {
    if (w_.cols() == 0 || w_.cols() > w_.rows()) {
        throw DimensionError(
            "CodeIsometry: code dimension " + std::to_string(w_.cols()) + " must be in [1, " +
            std::to_string(w_.rows()) + "]");
    }
    if (!w_.all_finite()) {
        throw InvalidArgumentError("CodeIsometry: non-finite entries");
    }
    double defect = isometry_defect(w_);
    if (defect > tol) {
        throw NotIsometryError("CodeIsometry: ||W^dag W - I||_F = " + std::to_string(defect), defect);
    }
}

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) : m_(std::move(m)) {
    if (!m_.is_square() || m_.rows() == 0) {
        throw DimensionError("DensityMatrix: matrix must be square and non-empty");
    }
    if (!m_.all_finite()) {
        throw InvalidArgumentError("DensityMatrix: non-finite entries");
    }
    double anti = frobenius_distance(m_, dagger(m_));
    if (anti > tol) {
        throw InvalidStateError("DensityMatrix: not Hermitian, ||rho - rho^dag||_F = " + std::to_string(anti), anti);
    }
    double trace_defect = std::abs(trace(m_) - Complex(1.0));
    if (trace_defect > tol) {
        throw InvalidStateError("DensityMatrix: trace differs from 1 by " + std::to_string(trace_defect), trace_defect);
    }
    auto eig = hermitian_eig(m_, 1.0);
    double smallest = eig.eigenvalues.back();
    if (smallest < -tol) {
        throw InvalidStateError("DensityMatrix: negative eigenvalue " + std::to_string(smallest), smallest);
    }
}

ComplexMatrix apply_channel(const QuantumChannel &phi, const ComplexMatrix &rho) {
    if (!rho.is_square() || rho.rows() != phi.dim()) {
        throw DimensionError(
            "apply_channel: input is " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()) +
            ", channel dimension is " + std::to_string(phi.dim()));
    }
    ComplexMatrix out(phi.dim(), phi.dim());
    for (const auto &f : phi.kraus()) {
        out += f * rho * dagger(f);
    }
    return out;
}

ComplexMatrix encode(const CodeIsometry &code, const DensityMatrix &data) {
    if (data.dim() != code.code_dim()) {
        throw DimensionError(
            "encode: data state has dimension " + std::to_string(data.dim()) + ", code dimension is " +
            std::to_string(code.code_dim()));
    }
    return code.w() * data.matrix() * dagger(code.w());
}

ComplexMatrix projector(const CodeIsometry &code) {
    return code.w() * dagger(code.w());
}

TracePreservation is_trace_preserving(const QuantumChannel &phi, double tol) {
    ComplexMatrix sum(phi.dim(), phi.dim());
    for (const auto &f : phi.kraus()) {
        sum += dagger(f) * f;
    }
    double residual = frobenius_distance(sum, ComplexMatrix::identity(phi.dim()));
    return {residual <= tol, residual};
}

}  // namespace qrecover
