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

#ifndef QRECOVER_CHANNEL_H
#define QRECOVER_CHANNEL_H

#include <span>
#include <vector>

#include "qrecover/matrix.h"
#include "qrecover/tolerances.h"

namespace qrecover {

/// A (possibly sub-normalized) completely positive map in operator-sum form,
/// rho -> sum_j F_j rho F_j^dagger. Kraus order is preserved.
class QuantumChannel {
   public:
    /// Throws DimensionError unless the list is non-empty and every operator is
    /// square with the same size; InvalidArgumentError on non-finite entries.
    explicit QuantumChannel(std::vector<ComplexMatrix> kraus);

    size_t dim() const noexcept {
        return dim_;
    }
    size_t size() const noexcept {
        return kraus_.size();
    }
    const std::vector<ComplexMatrix> &kraus() const noexcept {
        return kraus_;
    }
    const ComplexMatrix &operator[](size_t j) const {
        return kraus_[j];
    }

    bool operator==(const QuantumChannel &other) const = default;

   private:
    size_t dim_;
    std::vector<ComplexMatrix> kraus_;
};

/// n x k matrix W with orthonormal columns; its range is the code subspace.
class CodeIsometry {
   public:
    /// Throws NotIsometryError (carrying ||W^dag W - I||_F) when the columns are not
    /// orthonormal within tol, DimensionError when k > n or k == 0.
    explicit CodeIsometry(ComplexMatrix w, double tol = Tolerances{}.isometry);

    size_t ambient_dim() const noexcept {
        return w_.rows();
    }
    size_t code_dim() const noexcept {
        return w_.cols();
    }
    const ComplexMatrix &w() const noexcept {
        return w_;
    }

    bool operator==(const CodeIsometry &other) const = default;

   private:
    ComplexMatrix w_;
};

/// Hermitian, positive semidefinite, unit-trace matrix. Validated on construction.
class DensityMatrix {
   public:
    explicit DensityMatrix(ComplexMatrix m, double tol = Tolerances{}.density);

    size_t dim() const noexcept {
        return m_.rows();
    }
    const ComplexMatrix &matrix() const noexcept {
        return m_;
    }

   private:
    ComplexMatrix m_;
};

/// sum_j F_j rho F_j^dagger. rho may be any square matrix of the channel's dimension.
ComplexMatrix apply_channel(const QuantumChannel &phi, const ComplexMatrix &rho);

/// W rho W^dagger.
ComplexMatrix encode(const CodeIsometry &code, const DensityMatrix &data);

/// P = W W^dagger.
ComplexMatrix projector(const CodeIsometry &code);

struct TracePreservation {
    bool trace_preserving;
    /// ||sum_j F_j^dag F_j - I||_F.
    double residual;
};

TracePreservation is_trace_preserving(const QuantumChannel &phi, double tol = Tolerances{}.trace_preserving);

}  // namespace qrecover

#endif
