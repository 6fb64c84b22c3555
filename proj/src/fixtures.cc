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

#include "qrecover/fixtures.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "qrecover/errors.h"
#include "qrecover/factorizations.h"
#include "qrecover/kl_verifier.h"
#include "qrecover/random.h"

namespace qrecover {

namespace {

const Complex kI(0, 1);

void require_probabilities(std::span<const double> p, const char *who) {
    double total = 0;
    for (double x : p) {
        if (!(x >= 0) || !std::isfinite(x)) {
            throw InvalidArgumentError(std::string(who) + ": probabilities must be finite and non-negative");
        }
        total += x;
    }
    if (total > 1 + 1e-12) {
        throw InvalidArgumentError(std::string(who) + ": probabilities sum to " + std::to_string(total) + " > 1");
    }
}

ComplexMatrix basis_columns(size_t n, std::initializer_list<size_t> indices) {
    ComplexMatrix w(n, indices.size());
    size_t c = 0;
    for (size_t i : indices) {
        w(i, c++) = 1.0;
    }
    return w;
}

// Operator acting as `op` on qubit `which` (0 = most significant) of three.
ComplexMatrix on_qubit(const ComplexMatrix &op, size_t which) {
    std::vector<ComplexMatrix> factors(3, ComplexMatrix::identity(2));
    factors[which] = op;
    return kron_all(factors);
}

ComplexMatrix bit_flip_code() {
    return basis_columns(8, {0, 7});
}

std::vector<double> sorted_positive(std::span<const double> p) {
    std::vector<double> out;
    for (double x : p) {
        if (x > 0) {
            out.push_back(x);
        }
    }
    std::stable_sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace

ComplexMatrix pauli_x() {
    return {{0, 1}, {1, 0}};
}

ComplexMatrix pauli_y() {
    return {{0, -kI}, {kI, 0}};
}

ComplexMatrix pauli_z() {
    return {{1, 0}, {0, -1}};
}

ComplexMatrix exp_i_sigma_x(double t) {
    return {{std::cos(t), kI * std::sin(t)}, {kI * std::sin(t), std::cos(t)}};
}

ComplexMatrix kron_all(const std::vector<ComplexMatrix> &factors) {
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (const auto &f : factors) {
        out = kron(out, f);
    }
    return out;
}

CorrectableInstance example1() {
    const double h = 1 / std::numbers::sqrt2;
    std::vector<Complex> u_diag = {1.0, -1.0, kI, -kI};
    auto u = ComplexMatrix::diagonal(u_diag);
    std::vector<ComplexMatrix> kraus = {ComplexMatrix::identity(4) * Complex(h), u * Complex(h)};
    ComplexMatrix w = {{h, 0}, {h, 0}, {0, h}, {0, h}};
    return {
        QuantumChannel(std::move(kraus)),
        CodeIsometry(std::move(w)),
        ComplexMatrix::identity(2) * Complex(0.5),
        "example1",
    };
}

ComplexMatrix example1_reference_recovery() {
    const double h = 1 / std::numbers::sqrt2;
    ComplexMatrix r = {
        {1, 0, 1, 0},
        {1, 0, -1, 0},
        {0, 1, 0, kI},
        {0, 1, 0, -kI},
    };
    return r * Complex(h);
}

CorrectableInstance example2(std::array<double, 4> p) {
    require_probabilities(p, "example2");
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(ComplexMatrix::identity(8) * Complex(std::sqrt(p[0])));
    for (size_t a = 0; a < 3; a++) {
        kraus.push_back(on_qubit(pauli_x(), a) * Complex(std::sqrt(p[a + 1])));
    }
    auto xi = sorted_positive(p);
    std::optional<ComplexMatrix> expected;
    if (!xi.empty()) {
        expected = ComplexMatrix::diagonal(std::span<const double>(xi));
    }
    return {QuantumChannel(std::move(kraus)), CodeIsometry(bit_flip_code()), std::move(expected), "example2"};
}

ComplexMatrix example2_reference_recovery() {
    ComplexMatrix r(8, 8);
    // 1-based (row, col) pairs.
    const std::pair<size_t, size_t> ones[] = {{1, 1}, {2, 7}, {3, 5}, {4, 4}, {5, 3}, {6, 6}, {7, 8}, {8, 2}};
    for (auto [row, col] : ones) {
        r(row - 1, col - 1) = 1.0;
    }
    return r;
}

QuantumChannel example3(std::array<double, 4> p_tilde, std::array<double, 3> t) {
    require_probabilities(p_tilde, "example3");
    for (double x : t) {
        if (!std::isfinite(x)) {
            throw InvalidArgumentError("example3: rotation angles must be finite");
        }
    }
    std::vector<ComplexMatrix> kraus;
    kraus.push_back(ComplexMatrix::identity(8) * Complex(std::sqrt(p_tilde[0])));
    for (size_t a = 0; a < 3; a++) {
        kraus.push_back(on_qubit(exp_i_sigma_x(t[a]), a) * Complex(std::sqrt(p_tilde[a + 1])));
    }
    return QuantumChannel(std::move(kraus));
}

ComplexMatrix example3_xi_tilde(std::array<double, 4> p_tilde, std::array<double, 3> t) {
    ComplexMatrix xi(4, 4);
    xi(0, 0) = p_tilde[0];
    for (size_t a = 0; a < 3; a++) {
        const double c = std::cos(t[a]);
        const double s = std::sin(t[a]);
        const double pa = p_tilde[a + 1];
        xi(0, 0) += pa * c * c;
        xi(0, a + 1) = -kI * pa * c * s;
        xi(a + 1, 0) = kI * pa * c * s;
        xi(a + 1, a + 1) = pa * s * s;
    }
    return xi;
}

ComplexMatrix example3_coefficients(std::array<double, 4> p, std::array<double, 4> p_tilde, std::array<double, 3> t) {
    ComplexMatrix coeffs(4, 4);
    coeffs(0, 0) = std::sqrt(p_tilde[0] / p[0]);
    for (size_t a = 0; a < 3; a++) {
        coeffs(0, a + 1) = std::sqrt(p_tilde[a + 1] / p[0]) * std::cos(t[a]);
        coeffs(a + 1, a + 1) = kI * std::sqrt(p_tilde[a + 1] / p[a + 1]) * std::sin(t[a]);
    }
    return coeffs;
}

CorrectableInstance non_correctable_example() {
    const double h = 1 / std::numbers::sqrt2;
    std::vector<ComplexMatrix> kraus = {
        ComplexMatrix::identity(8) * Complex(h),
        on_qubit(pauli_x(), 0) * Complex(h),
    };
    return {QuantumChannel(std::move(kraus)), CodeIsometry(basis_columns(8, {0, 4})), std::nullopt, "noncorrectable"};
}

QuantumChannel phase_flip_channel(double p) {
    if (!(p >= 0 && p <= 1)) {
        throw InvalidArgumentError("phase_flip_channel: p must lie in [0, 1]");
    }
    std::vector<ComplexMatrix> kraus = {
        ComplexMatrix::identity(8) * Complex(std::sqrt(1 - p)),
        on_qubit(pauli_z(), 0) * Complex(std::sqrt(p)),
    };
    return QuantumChannel(std::move(kraus));
}

CorrectableInstance identity_instance(size_t n) {
    return {
        QuantumChannel({ComplexMatrix::identity(n)}),
        CodeIsometry(ComplexMatrix::identity(n)),
        ComplexMatrix::identity(1),
        "identity",
    };
}

CorrectableInstance random_correctable(size_t n, size_t k, size_t q, uint64_t seed, bool trace_preserving) {
    if (k == 0 || q == 0 || q * k > n) {
        throw InvalidArgumentError(
            "random_correctable: need 1 <= k, 1 <= q and q*k <= n, got n=" + std::to_string(n) + " k=" +
            std::to_string(k) + " q=" + std::to_string(q));
    }
    Rng rng(seed);
    auto code_frame = random_unitary(n, rng);
    auto w = code_frame.leading_cols(k);
    auto complement = code_frame.block(0, k, n, n - k);
    auto ranges = random_isometry(n, q * k, rng);

    std::vector<double> p(q);
    double total = 0;
    for (auto &x : p) {
        x = 0.2 + rng.uniform();
        total += x;
    }
    for (auto &x : p) {
        x /= total;
    }

    std::vector<ComplexMatrix> kraus;
    for (size_t j = 0; j < q; j++) {
        auto a = ranges.block(0, j * k, n, k);
        ComplexMatrix c;
        if (trace_preserving) {
            auto completed = complete_to_unitary(a, 1e-8);
            c = completed.block(0, k, n, n - k) * random_unitary(n - k, rng);
        } else {
            c = random_gaussian_matrix(n, n - k, rng) * Complex(0.5);
        }
        auto f = a * dagger(w) + c * dagger(complement);
        kraus.push_back(f * Complex(std::sqrt(p[j])));
    }
    auto xi = sorted_positive(p);
    return {
        QuantumChannel(std::move(kraus)),
        CodeIsometry(std::move(w)),
        ComplexMatrix::diagonal(std::span<const double>(xi)),
        "random(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",q=" + std::to_string(q) +
            ",seed=" + std::to_string(seed) + ")",
    };
}

double oracle_roundtrip(
    const QuantumChannel &channel, const CodeIsometry &code, const RecoveryPlan &plan, size_t trials,
    uint64_t seed) {
    const size_t n = code.ambient_dim();
    const size_t k = code.code_dim();
    const size_t q = plan.q;
    const auto &w = code.w();
    const auto &r = plan.r_unitary;
    Rng rng(seed);

    double worst = 0;
    for (size_t trial = 0; trial < trials; trial++) {
        auto data = trial % 2 == 0 ? random_pure_state(k, rng) : random_mixed_state(k, rng);
        const auto &rho_data = data.matrix();

        // Encoded state and channel output by explicit index sums.
        ComplexMatrix encoded(n, n);
        for (size_t a = 0; a < n; a++) {
            for (size_t b = 0; b < n; b++) {
                for (size_t i = 0; i < k; i++) {
                    for (size_t j = 0; j < k; j++) {
                        encoded(a, b) += w(a, i) * rho_data(i, j) * std::conj(w(b, j));
                    }
                }
            }
        }
        ComplexMatrix output(n, n);
        for (const auto &f : channel.kraus()) {
            ComplexMatrix f_rho(n, n);
            for (size_t a = 0; a < n; a++) {
                for (size_t c = 0; c < n; c++) {
                    if (f(a, c) == Complex{}) {
                        continue;
                    }
                    for (size_t b = 0; b < n; b++) {
                        f_rho(a, b) += f(a, c) * encoded(c, b);
                    }
                }
            }
            for (size_t a = 0; a < n; a++) {
                for (size_t b = 0; b < n; b++) {
                    Complex s{};
                    for (size_t c = 0; c < n; c++) {
                        s += f_rho(a, c) * std::conj(f(b, c));
                    }
                    output(a, b) += s;
                }
            }
        }

        auto conjugated = dagger(r) * output * r;
        ComplexMatrix recovered(k, k);
        double outside = 0;
        for (size_t a = 0; a < n; a++) {
            for (size_t b = 0; b < n; b++) {
                if (a >= q * k || b >= q * k) {
                    outside += std::norm(conjugated(a, b));
                }
            }
        }
        for (size_t anc = 0; anc < q; anc++) {
            for (size_t i = 0; i < k; i++) {
                for (size_t j = 0; j < k; j++) {
                    recovered(i, j) += conjugated(anc * k + i, anc * k + j);
                }
            }
        }
        Complex norm = Complex{};
        for (size_t i = 0; i < k; i++) {
            norm += recovered(i, i);
        }
        recovered *= 1.0 / norm;

        worst = std::max(worst, frobenius_distance(recovered, rho_data));
        worst = std::max(worst, std::sqrt(outside));
    }
    return worst;
}

double oracle_roundtrip(const CorrectableInstance &instance, size_t trials, uint64_t seed, const Tolerances &tol) {
    auto report = verify_correctable(instance.channel, instance.code, tol);
    auto plan = build_recovery(instance.channel, instance.code, report, tol);
    return oracle_roundtrip(instance.channel, instance.code, plan, trials, seed);
}

std::vector<std::string> fixture_names() {
    return {"example1", "example2", "example3", "random", "noncorrectable", "phaseflip", "identity"};
}

NamedFixture named_fixture(const std::string &name, const FixtureOptions &options) {
    if (name == "example1") {
        auto inst = example1();
        return {std::move(inst.channel), std::move(inst.code)};
    }
    if (name == "example2") {
        auto inst = example2(options.p);
        return {std::move(inst.channel), std::move(inst.code)};
    }
    if (name == "example3") {
        return {example3(options.p_tilde, options.t), CodeIsometry(bit_flip_code())};
    }
    if (name == "random") {
        auto inst = random_correctable(options.n, options.k, options.q, options.seed);
        return {std::move(inst.channel), std::move(inst.code)};
    }
    if (name == "noncorrectable") {
        auto inst = non_correctable_example();
        return {std::move(inst.channel), std::move(inst.code)};
    }
    if (name == "phaseflip") {
        return {phase_flip_channel(0.1), CodeIsometry(bit_flip_code())};
    }
    if (name == "identity") {
        auto inst = identity_instance(options.n);
        return {std::move(inst.channel), std::move(inst.code)};
    }
    throw InvalidArgumentError("unknown fixture '" + name + "'");
}

}  // namespace qrecover
