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

#ifndef QRECOVER_FIXTURES_H
#define QRECOVER_FIXTURES_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qrecover/channel.h"
#include "qrecover/matrix.h"
#include "qrecover/recovery.h"
#include "qrecover/tolerances.h"

namespace qrecover {

struct CorrectableInstance {
    QuantumChannel channel;
    CodeIsometry code;
    /// Known ancilla state in descending-eigenvalue order, when available.
    std::optional<ComplexMatrix> expected_xi;
    std::string label;
};

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
/// exp(i t sigma_x) = cos t I + i sin t sigma_x.
ComplexMatrix exp_i_sigma_x(double t);
/// Kronecker product of a list of operators, leftmost factor slowest.
ComplexMatrix kron_all(const std::vector<ComplexMatrix> &factors);

/// Mixed-unitary channel rho -> (rho + U rho U^dag) / 2 with U = diag(1, -1, i, -i), on
/// the two-dimensional code spanned by (|00> + |01>)/sqrt2 and (|10> + |11>)/sqrt2.
CorrectableInstance example1();
/// The explicit 4 x 4 recovery unitary known to work for example1().
ComplexMatrix example1_reference_recovery();

/// Three-qubit bit-flip channel with Kraus operators sqrt(p0) I, sqrt(p1) X1, sqrt(p2) X2,
/// sqrt(p3) X3 on the code spanned by |000> and |111>. Requires p_j >= 0 and
/// sum p_j <= 1 (InvalidArgumentError otherwise).
CorrectableInstance example2(std::array<double, 4> p);
/// The 8 x 8 permutation E11 + E27 + E35 + E44 + E53 + E66 + E78 + E82 (1-based).
ComplexMatrix example2_reference_recovery();

/// Rotation-error channel sqrt(pt0) I, sqrt(pt_a) exp(i t_a sigma_x) on qubit a.
QuantumChannel example3(std::array<double, 4> p_tilde, std::array<double, 3> t);
/// Closed-form ancilla state of example3 under the bit-flip plan, in the order of the
/// original bit-flip Kraus operators.
ComplexMatrix example3_xi_tilde(std::array<double, 4> p_tilde, std::array<double, 3> t);
/// Closed-form expansion coefficients of example3's Kraus operators over example2's.
ComplexMatrix example3_coefficients(std::array<double, 4> p, std::array<double, 4> p_tilde, std::array<double, 3> t);

/// Two Kraus operators {sqrt(1/2) I, sqrt(1/2) X1} on the code spanned by |000> and
/// |100>; violates the Knill-Laflamme condition.
CorrectableInstance non_correctable_example();
/// {sqrt(1 - p) I, sqrt(p) Z1} on three qubits; its Z error is outside the bit-flip span.
QuantumChannel phase_flip_channel(double p);
/// Single Kraus operator I_n with W = I_n.
CorrectableInstance identity_instance(size_t n);

/// Random correctable instance with Lambda = diag(p) of rank q.
///
/// W is a random n x k isometry and A = [A_1 ... A_q] a random n x qk isometry. Each
/// Kraus operator is F_j = sqrt(p_j) (A_j W^dag + C_j Q^dag), where Q spans the
/// complement of the code. With trace_preserving set, C_j completes A_j to a random
/// unitary so sum_j F_j^dag F_j = I; otherwise C_j is a Gaussian sample.
/// Requires 1 <= q, 1 <= k and qk <= n (InvalidArgumentError otherwise).
CorrectableInstance random_correctable(size_t n, size_t k, size_t q, uint64_t seed, bool trace_preserving = true);

/// Largest discrepancy over random data states between the state recovered from the
/// noisy output and the original.
///
/// Each trial draws a pure (even trials) or mixed (odd trials) data state, applies the
/// channel by explicit Kraus summation, conjugates by R, traces out the ancilla of the
/// leading block by index arithmetic and normalizes by the block trace. The reported
/// discrepancy is the larger of the Frobenius error and the weight outside the block.
double oracle_roundtrip(
    const QuantumChannel &channel, const CodeIsometry &code, const RecoveryPlan &plan, size_t trials,
    uint64_t seed);
/// Verifies, builds the plan and runs the oracle. Throws NotCorrectableError.
double oracle_roundtrip(const CorrectableInstance &instance, size_t trials, uint64_t seed, const Tolerances &tol = {});

/// Names accepted by named_fixture: example1, example2, example3, random, noncorrectable,
/// phaseflip, identity.
std::vector<std::string> fixture_names();

struct FixtureOptions {
    std::array<double, 4> p = {0.7, 0.1, 0.1, 0.1};
    std::array<double, 4> p_tilde = {0.4, 0.2, 0.2, 0.2};
    std::array<double, 3> t = {0.3, 0.7, 1.1};
    size_t n = 8;
    size_t k = 2;
    size_t q = 4;
    uint64_t seed = 0;
};

struct NamedFixture {
    QuantumChannel channel;
    std::optional<CodeIsometry> code;
};

/// Throws InvalidArgumentError for unknown names.
NamedFixture named_fixture(const std::string &name, const FixtureOptions &options = {});

}  // namespace qrecover

#endif
