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

#ifndef QRECOVER_TOLERANCES_H
#define QRECOVER_TOLERANCES_H

namespace qrecover {

/// Every numerical threshold used by the library. All are relative unless noted.
struct Tolerances {
    /// Hermiticity of eigensolver inputs and orthonormality checks, relative Frobenius.
    double factorization = 1e-10;
    /// Knill-Laflamme residual relative to the Frobenius norm of the Gram matrix.
    double correctable = 1e-8;
    /// Gram matrix eigenvalues below rank * lambda_max count as zero.
    double rank = 1e-9;
    /// Span-membership defect when reusing a plan for a new channel.
    double span = 1e-8;
    /// Density matrix validation (hermiticity, positivity, unit trace), absolute.
    double density = 1e-8;
    /// Isometry check for code matrices and for the assembled first block of R, absolute Frobenius.
    double isometry = 1e-8;
    /// Trace preservation check, absolute Frobenius.
    double trace_preserving = 1e-10;

    bool operator==(const Tolerances &other) const = default;
};

}  // namespace qrecover

#endif
