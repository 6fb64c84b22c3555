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

#ifndef QRECOVER_RECOVERY_H
#define QRECOVER_RECOVERY_H

#include <vector>

#include "qrecover/channel.h"
#include "qrecover/kl_verifier.h"
#include "qrecover/matrix.h"
#include "qrecover/tolerances.h"

namespace qrecover {

/// Everything needed to undo a correctable channel on a code with a single unitary
/// followed by discarding the ancilla factor.
///
/// For every data state rho_data,
///     R^dag Phi(W rho_data W^dag) R = (xi (x) rho_data) (+) 0_{n - qk}.
struct RecoveryPlan {
    /// n x n recovery unitary R = [R1 R2].
    ComplexMatrix r_unitary;
    /// q x q positive definite ancilla state.
    ComplexMatrix xi;
    size_t q;
    CodeIsometry code;
    /// All r rotated Kraus operators; those past index q annihilate the code.
    std::vector<ComplexMatrix> rotated_kraus;
    /// tr xi.
    double gamma;

    size_t ambient_dim() const noexcept {
        return code.ambient_dim();
    }
    size_t code_dim() const noexcept {
        return code.code_dim();
    }
};

/// F~_j = sum_i rotation(i, j) F_i. Throws NotUnitaryError when the rotation is not
/// unitary within tol (relative to sqrt(r)), DimensionError on size mismatch.
std::vector<ComplexMatrix> rotate_kraus(
    const QuantumChannel &phi, const ComplexMatrix &rotation, double tol = Tolerances{}.factorization);

/// Builds R1 = [F~_1 W ... F~_q W] (xi^{-1/2} (x) I_k) and completes it to a unitary.
///
/// Throws NotCorrectableError for a negative report, SingularAncillaError when xi has
/// a non-positive eigenvalue, NotIsometryError when R1 is not an isometry within
/// tol.isometry, DimensionError when the report does not belong to (phi, code).
RecoveryPlan build_recovery(
    const QuantumChannel &phi, const CodeIsometry &code, const KLReport &report, const Tolerances &tol = {});

/// R^dag m R.
ComplexMatrix conjugate_output(const RecoveryPlan &plan, const ComplexMatrix &phi_output);

struct RecoveredState {
    /// k x k data state, normalized by gamma.
    ComplexMatrix data;
    /// Frobenius norm of R^dag m R outside its leading qk x qk block.
    double leak;
};

/// Conjugates by R, keeps the leading qk x qk block, traces out the q-dimensional
/// ancilla and divides by gamma.
RecoveredState recover(const RecoveryPlan &plan, const ComplexMatrix &phi_output);

/// W tr_1(R^dag m R) W^dag, without dividing by gamma, so that the composition with
/// the channel is gamma * identity on code states. When k divides n the partial trace
/// runs over the whole (n/k)-dimensional ancilla factor and the map is trace
/// preserving on every input; otherwise it runs over the leading qk x qk block.
ComplexMatrix recover_full(const RecoveryPlan &plan, const ComplexMatrix &phi_output);

struct PlanExtension {
    /// xi^{1/2} T T^dag xi^{1/2}.
    ComplexMatrix xi_tilde;
    /// q x s matrix T with G_j W = sum_i T(i, j) F~_i W.
    ComplexMatrix coeffs;
    /// Worst ||G_j W - sum_i T(i, j) F~_i W||_F relative to max_j ||G_j W||_F.
    double residual;
};

/// Reuses an existing plan for a channel whose Kraus operators are linear
/// combinations of the plan's. Throws SpanMembershipError (with the residual) when
/// the new operators' action on the code leaves the span beyond tol.span.
PlanExtension extend_plan(const RecoveryPlan &plan, const QuantumChannel &new_phi, const Tolerances &tol = {});

}  // namespace qrecover

#endif
