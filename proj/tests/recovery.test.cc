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

#include <gtest/gtest.h>

#include <numbers>

#include "qrecover/errors.h"
#include "qrecover/factorizations.h"
#include "qrecover/fixtures.h"
#include "qrecover/random.h"
#include "test_util.h"

using namespace qrecover;
using qrecover::testing::matrix_unit;

namespace {

RecoveryPlan plan_for(const CorrectableInstance &inst) {
    auto report = verify_correctable(inst.channel, inst.code);
    return build_recovery(inst.channel, inst.code, report);
}

// Channel with an extra Kraus operator that annihilates the code, then mixed by a
// random unitary so that Lambda is rank deficient and not diagonal.
CorrectableInstance rank_deficient_mixed(uint64_t seed) {
    auto inst = random_correctable(8, 2, 3, seed);
    Rng rng(seed + 1000);
    auto p = projector(inst.code);
    auto annihilator = random_gaussian_matrix(8, 8, rng) * (ComplexMatrix::identity(8) - p) * Complex(0.1);
    auto kraus = inst.channel.kraus();
    kraus.push_back(annihilator);
    QuantumChannel extended(std::move(kraus));
    QuantumChannel mixed(rotate_kraus(extended, random_unitary(4, rng)));
    return {std::move(mixed), inst.code, inst.expected_xi, inst.label + "+mixed"};
}

}  // namespace

TEST(rotate_kraus, identity_rotation) {
    auto inst = example2({0.4, 0.3, 0.2, 0.1});
    auto rotated = rotate_kraus(inst.channel, ComplexMatrix::identity(4));
    ASSERT_EQ(rotated, inst.channel.kraus());
}

TEST(rotate_kraus, hadamard_mixing) {
    Rng rng(1);
    auto a = random_gaussian_matrix(3, 3, rng);
    auto b = random_gaussian_matrix(3, 3, rng);
    QuantumChannel phi({a, b});
    const double h = 1 / std::numbers::sqrt2;
    auto rotated = rotate_kraus(phi, ComplexMatrix({{h, h}, {h, -h}}));
    EXPECT_MATRIX_NEAR(rotated[0], (a + b) * Complex(h), 1e-15);
    EXPECT_MATRIX_NEAR(rotated[1], (a - b) * Complex(h), 1e-15);
    auto rho = random_mixed_state(3, rng).matrix();
    EXPECT_MATRIX_NEAR(apply_channel(QuantumChannel(rotated), rho), apply_channel(phi, rho), 1e-13);
}

TEST(rotate_kraus, errors) {
    auto phi = example1().channel;
    ASSERT_THROW(rotate_kraus(phi, ComplexMatrix::identity(3)), DimensionError);
    ASSERT_THROW(rotate_kraus(phi, ComplexMatrix({{1, 1}, {0, 1}})), NotUnitaryError);
}

TEST(build_recovery, bit_flip_matches_reference_permutation) {
    auto inst = example2({0.4, 0.3, 0.2, 0.1});
    auto plan = plan_for(inst);
    ASSERT_EQ(plan.q, 4u);
    EXPECT_MATRIX_NEAR(plan.r_unitary, example2_reference_recovery(), 1e-15);
}

TEST(build_recovery, example1_output_structure) {
    auto inst = example1();
    auto plan = plan_for(inst);
    ASSERT_EQ(plan.q, 2u);
    EXPECT_MATRIX_NEAR(plan.xi, ComplexMatrix::identity(2) * Complex(0.5), 1e-15);
    Rng rng(2);
    for (int trial = 0; trial < 5; trial++) {
        auto data = random_mixed_state(2, rng);
        auto out = conjugate_output(plan, apply_channel(inst.channel, encode(inst.code, data)));
        EXPECT_MATRIX_NEAR(out, kron(ComplexMatrix::identity(2) * Complex(0.5), data.matrix()), 1e-14);
    }
}

TEST(build_recovery, identity_channel) {
    auto plan = plan_for(identity_instance(4));
    ASSERT_EQ(plan.q, 1u);
    EXPECT_MATRIX_NEAR(plan.xi, ComplexMatrix({{1}}), 1e-15);
    EXPECT_MATRIX_NEAR(plan.r_unitary, ComplexMatrix::identity(4), 1e-15);
}

TEST(build_recovery, errors) {
    auto bad = non_correctable_example();
    auto report = verify_correctable(bad.channel, bad.code);
    ASSERT_THROW(build_recovery(bad.channel, bad.code, report), NotCorrectableError);

    auto inst = example2({0.4, 0.3, 0.2, 0.1});
    auto good = verify_correctable(inst.channel, inst.code);
    ASSERT_THROW(build_recovery(example1().channel, example1().code, good), DimensionError);

    auto singular = good;
    singular.spectrum->xi(3, 3) = 0;
    ASSERT_THROW(build_recovery(inst.channel, inst.code, singular), SingularAncillaError);
}

TEST(conjugate_output, examples) {
    auto inst = example2({0.4, 0.3, 0.2, 0.1});
    auto plan = plan_for(inst);
    ASSERT_EQ(conjugate_output(plan, ComplexMatrix(8, 8)), ComplexMatrix(8, 8));
    ASSERT_THROW(conjugate_output(plan, ComplexMatrix(4, 4)), DimensionError);

    Rng rng(3);
    auto data = random_pure_state(2, rng);
    auto out = conjugate_output(plan, apply_channel(inst.channel, encode(inst.code, data)));
    EXPECT_MATRIX_NEAR(out, kron(*inst.expected_xi, data.matrix()), 1e-15);
}

TEST(recover, bit_flip_round_trip_is_exact) {
    auto inst = example2({0.4, 0.3, 0.2, 0.1});
    auto plan = plan_for(inst);
    Rng rng(4);
    for (int trial = 0; trial < 10; trial++) {
        auto data = random_mixed_state(2, rng);
        auto result = recover(plan, apply_channel(inst.channel, encode(inst.code, data)));
        EXPECT_MATRIX_NEAR(result.data, data.matrix(), 1e-14);
        EXPECT_LE(result.leak, 1e-14);
    }
}

TEST(recover, identity_channel_without_noise) {
    auto inst = identity_instance(3);
    auto plan = plan_for(inst);
    Rng rng(5);
    auto data = random_mixed_state(3, rng);
    auto result = recover(plan, encode(inst.code, data));
    EXPECT_MATRIX_NEAR(result.data, data.matrix(), 1e-15);
    EXPECT_EQ(result.leak, 0.0);
}

TEST(recover, random_three_qubit_instance) {
    for (uint64_t seed = 0; seed < 5; seed++) {
        auto inst = random_correctable(8, 2, 3, seed);
        auto plan = plan_for(inst);
        Rng rng(seed);
        auto data = random_mixed_state(2, rng);
        auto result = recover(plan, apply_channel(inst.channel, encode(inst.code, data)));
        EXPECT_MATRIX_NEAR(result.data, data.matrix(), 1e-9);
        EXPECT_LE(result.leak, 1e-9);
    }
}

TEST(recover_full, bit_flip_restores_encoded_state) {
    auto inst = example2({0.7, 0.1, 0.1, 0.1});
    auto plan = plan_for(inst);
    Rng rng(6);
    auto rho = encode(inst.code, random_pure_state(2, rng));
    EXPECT_MATRIX_NEAR(recover_full(plan, apply_channel(inst.channel, rho)), rho, 1e-14);
    ASSERT_EQ(recover_full(plan, ComplexMatrix(8, 8)), ComplexMatrix(8, 8));
}

TEST(recover_full, sub_normalized_channel_scales_by_gamma) {
    auto inst = example2({0.2, 0.15, 0.1, 0.05});
    auto plan = plan_for(inst);
    EXPECT_NEAR(plan.gamma, 0.5, 1e-15);
    Rng rng(7);
    auto data = random_mixed_state(2, rng);
    auto rho = encode(inst.code, data);
    auto noisy = apply_channel(inst.channel, rho);
    EXPECT_MATRIX_NEAR(recover_full(plan, noisy), rho * Complex(0.5), 1e-14);
    EXPECT_MATRIX_NEAR(recover(plan, noisy).data, data.matrix(), 1e-14);
}

TEST(recover_full, non_divisible_dimension_uses_leading_block) {
    auto inst = random_correctable(7, 2, 3, 9);
    auto plan = plan_for(inst);
    Rng rng(8);
    auto rho = encode(inst.code, random_mixed_state(2, rng));
    EXPECT_MATRIX_NEAR(recover_full(plan, apply_channel(inst.channel, rho)), rho, 1e-10);
}

TEST(extend_plan, rotation_channel_matches_closed_form) {
    std::array<double, 4> p = {0.4, 0.3, 0.2, 0.1};
    std::array<double, 4> p_tilde = {0.4, 0.2, 0.2, 0.2};
    std::array<double, 3> t = {0.3, 0.7, 1.1};
    auto plan = plan_for(example2(p));
    auto ext = extend_plan(plan, example3(p_tilde, t));
    EXPECT_MATRIX_NEAR(ext.xi_tilde, example3_xi_tilde(p_tilde, t), 1e-12);
    EXPECT_MATRIX_NEAR(ext.coeffs, example3_coefficients(p, p_tilde, t), 1e-12);
    EXPECT_LE(ext.residual, 1e-14);
    EXPECT_NEAR(trace(ext.xi_tilde).real(), 1.0, 1e-12);
}

TEST(extend_plan, original_channel_reproduces_xi) {
    auto inst = example2({0.4, 0.3, 0.2, 0.1});
    auto plan = plan_for(inst);
    auto ext = extend_plan(plan, inst.channel);
    EXPECT_MATRIX_NEAR(ext.xi_tilde, plan.xi, 1e-14);
    EXPECT_MATRIX_NEAR(ext.coeffs, ComplexMatrix::identity(4), 1e-14);
}

TEST(extend_plan, zero_angles_collapse_onto_identity) {
    std::array<double, 4> p_tilde = {0.1, 0.2, 0.3, 0.4};
    auto plan = plan_for(example2({0.4, 0.3, 0.2, 0.1}));
    auto ext = extend_plan(plan, example3(p_tilde, {0, 0, 0}));
    ComplexMatrix expected(4, 4);
    expected(0, 0) = 1.0;
    EXPECT_MATRIX_NEAR(ext.xi_tilde, expected, 1e-14);
}

TEST(extend_plan, synthesized_coefficients_are_recovered) {
    for (uint64_t seed = 0; seed < 5; seed++) {
        auto inst = random_correctable(8, 2, 3, seed);
        auto plan = plan_for(inst);
        Rng rng(seed + 50);
        const size_t s = 4;
        auto t = random_gaussian_matrix(plan.q, s, rng) * Complex(0.4);
        std::vector<ComplexMatrix> kraus;
        for (size_t j = 0; j < s; j++) {
            ComplexMatrix g(8, 8);
            for (size_t i = 0; i < plan.q; i++) {
                g += plan.rotated_kraus[i] * t(i, j);
            }
            kraus.push_back(g);
        }
        auto ext = extend_plan(plan, QuantumChannel(kraus));
        auto xi_sqrt = hermitian_power(hermitian_eig(plan.xi), 0.5);
        EXPECT_MATRIX_NEAR(ext.coeffs, t, 1e-9);
        EXPECT_MATRIX_NEAR(ext.xi_tilde, xi_sqrt * t * dagger(t) * xi_sqrt, 1e-9);
    }
}

TEST(extend_plan, phase_flip_leaves_the_span) {
    auto plan = plan_for(example2({0.4, 0.3, 0.2, 0.1}));
    try {
        extend_plan(plan, phase_flip_channel(0.1));
        FAIL() << "expected SpanMembershipError";
    } catch (const SpanMembershipError &e) {
        // Z1 W is orthogonal to every F_i W; defect ||sqrt(0.1) Z1 W|| over ||sqrt(0.9) W||.
        EXPECT_NEAR(e.residual(), 1.0 / 3.0, 1e-14);
    }
    ASSERT_THROW(extend_plan(plan, QuantumChannel({ComplexMatrix::identity(4)})), DimensionError);
}

TEST(recovery_properties, unitarity_and_rotated_kraus_invariants) {
    std::vector<CorrectableInstance> cases;
    cases.push_back(example1());
    cases.push_back(example2({0.4, 0.3, 0.2, 0.1}));
    cases.push_back(example2({0.5, 0.3, 0.2, 0.0}));
    for (uint64_t seed = 0; seed < 5; seed++) {
        cases.push_back(random_correctable(10, 2, 4, seed));
        cases.push_back(random_correctable(9, 2, 3, seed, false));
        cases.push_back(rank_deficient_mixed(seed));
    }
    for (const auto &inst : cases) {
        auto plan = plan_for(inst);
        const size_t n = inst.code.ambient_dim();
        EXPECT_LE(isometry_defect(plan.r_unitary), 1e-10) << inst.label;
        auto xi_eig = hermitian_eig(plan.xi);
        EXPECT_GT(xi_eig.eigenvalues.back(), 0) << inst.label;
        QuantumChannel rotated(plan.rotated_kraus);
        for (size_t a = 0; a < n; a++) {
            for (size_t b = 0; b < n; b++) {
                auto e = matrix_unit(n, a, b);
                EXPECT_MATRIX_NEAR(apply_channel(rotated, e), apply_channel(inst.channel, e), 1e-10);
            }
        }
        for (size_t j = plan.q; j < plan.rotated_kraus.size(); j++) {
            EXPECT_LE(frobenius_norm(plan.rotated_kraus[j] * inst.code.w()), 1e-8) << inst.label << " j=" << j;
        }
    }
}

TEST(recovery_properties, round_trip_and_block_structure) {
    std::vector<CorrectableInstance> cases;
    cases.push_back(example1());
    cases.push_back(random_correctable(8, 2, 4, 1));
    cases.push_back(random_correctable(9, 2, 3, 2, false));
    cases.push_back(rank_deficient_mixed(3));
    for (const auto &inst : cases) {
        auto plan = plan_for(inst);
        const size_t k = inst.code.code_dim();
        const size_t n = inst.code.ambient_dim();
        Rng rng(77);
        for (int trial = 0; trial < 100; trial++) {
            auto data = trial % 2 == 0 ? random_pure_state(k, rng) : random_mixed_state(k, rng);
            auto noisy = apply_channel(inst.channel, encode(inst.code, data));
            auto result = recover(plan, noisy);
            ASSERT_LE(frobenius_distance(result.data, data.matrix()), 1e-9) << inst.label;
            ASSERT_LE(result.leak, 1e-9) << inst.label;
            if (trial < 5) {
                auto expected = direct_sum(kron(plan.xi, data.matrix()), n - plan.q * k);
                EXPECT_MATRIX_NEAR(conjugate_output(plan, noisy), expected, 1e-9);
            }
        }
    }
}

TEST(recovery_properties, trace_preserving_recovery) {
    for (uint64_t seed = 0; seed < 5; seed++) {
        auto inst = random_correctable(8, 2, 4, seed);
        auto plan = plan_for(inst);
        EXPECT_NEAR(plan.gamma, 1.0, 1e-10);
        Rng rng(seed);
        for (int trial = 0; trial < 5; trial++) {
            auto rho = encode(inst.code, random_mixed_state(2, rng));
            auto back = recover_full(plan, apply_channel(inst.channel, rho));
            EXPECT_NEAR(std::abs(trace(back) - trace(rho)), 0, 1e-10);
        }
    }
}

TEST(recovery_properties, representation_freedom) {
    for (uint64_t seed = 0; seed < 5; seed++) {
        auto inst = random_correctable(8, 2, 3, seed);
        Rng rng(seed + 300);
        QuantumChannel mixed(rotate_kraus(inst.channel, random_unitary(3, rng)));
        auto plan_a = plan_for(inst);
        auto plan_b = plan_for({mixed, inst.code, std::nullopt, "mixed"});
        for (int trial = 0; trial < 10; trial++) {
            auto data = random_mixed_state(2, rng);
            auto rho = encode(inst.code, data);
            auto a = recover(plan_a, apply_channel(inst.channel, rho));
            auto b = recover(plan_b, apply_channel(mixed, rho));
            EXPECT_MATRIX_NEAR(a.data, b.data, 1e-9);
        }
    }
}

TEST(recovery_properties, extension_consistency) {
    std::array<double, 4> p = {0.4, 0.3, 0.2, 0.1};
    auto plan = plan_for(example2(p));
    Rng rng(9);
    for (int trial = 0; trial < 5; trial++) {
        std::array<double, 4> p_tilde;
        double total = 0;
        for (auto &x : p_tilde) {
            x = 0.1 + rng.uniform();
            total += x;
        }
        for (auto &x : p_tilde) {
            x /= total;
        }
        std::array<double, 3> t = {rng.uniform() * 3, rng.uniform() * 3, rng.uniform() * 3};
        auto channel = example3(p_tilde, t);
        ASSERT_TRUE(is_trace_preserving(channel).trace_preserving);
        auto ext = extend_plan(plan, channel);
        EXPECT_NEAR(std::abs(trace(ext.xi_tilde) - Complex(1)), 0, 1e-10);
        for (int s = 0; s < 10; s++) {
            auto data = random_mixed_state(2, rng);
            auto out = conjugate_output(plan, apply_channel(channel, encode(plan.code, data)));
            EXPECT_MATRIX_NEAR(out, kron(ext.xi_tilde, data.matrix()), 1e-9);
        }
    }
}
