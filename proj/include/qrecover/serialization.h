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

#ifndef QRECOVER_SERIALIZATION_H
#define QRECOVER_SERIALIZATION_H

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qrecover/channel.h"
#include "qrecover/kl_verifier.h"
#include "qrecover/matrix.h"
#include "qrecover/recovery.h"
#include "qrecover/tolerances.h"

namespace qrecover {

inline constexpr const char *kVersion = "0.1.0";

// Document layout (JSON):
//   matrix:  list of rows, each row a list of [re, im] pairs.
//   channel: {"dim": n, "kraus": [matrix, ...], "metadata": {string: string}}
//   code:    {"ambient_dim": n, "code_dim": k, "w": matrix, "metadata": {...}}
//   plan:    {"kind": "recovery_plan", "n", "k", "q", "gamma", "r", "xi", "w", "rotated_kraus"}
// Doubles are written in shortest round-trip form, so parse(dump(x)) is bit-exact.
//
// Parse failures are split by cause: ParseError for malformed documents,
// DimensionError for shape inconsistencies, NotIsometryError for a code matrix whose
// columns are not orthonormal (the error carries ||W^dag W - I||_F).

nlohmann::json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const nlohmann::json &j, const std::string &what = "matrix");

using Metadata = std::map<std::string, std::string>;

nlohmann::json channel_to_json(const QuantumChannel &phi, const Metadata &metadata = {});
QuantumChannel parse_channel(const nlohmann::json &j);

nlohmann::json code_to_json(const CodeIsometry &code, const Metadata &metadata = {});
CodeIsometry parse_code(const nlohmann::json &j, double tol = Tolerances{}.isometry);

nlohmann::json plan_to_json(const RecoveryPlan &plan);
RecoveryPlan parse_plan(const nlohmann::json &j, double tol = Tolerances{}.isometry);

nlohmann::json tolerances_to_json(const Tolerances &tol);
Tolerances tolerances_from_json(const nlohmann::json &j);

/// Machine-readable summary of a verification or construction run.
struct ReportDocument {
    std::string version = kVersion;
    bool correctable = false;
    size_t ambient_dim = 0;
    size_t code_dim = 0;
    size_t kraus_count = 0;
    double residual = 0;
    double relative_residual = 0;
    double hermiticity_residual = 0;
    std::vector<std::vector<double>> pair_residuals;
    ComplexMatrix lambda;
    std::optional<std::vector<double>> eigenvalues;
    std::optional<ComplexMatrix> xi;
    std::optional<size_t> q;
    std::optional<double> gamma;
    std::optional<ComplexMatrix> r_unitary;
    Tolerances tolerances;
    double timing_ms = 0;

    bool operator==(const ReportDocument &other) const = default;
};

ReportDocument make_report_document(
    const KLReport &report, size_t kraus_count, const Tolerances &tol, const RecoveryPlan *plan = nullptr,
    double timing_ms = 0);
nlohmann::json report_to_json(const ReportDocument &doc);
ReportDocument report_from_json(const nlohmann::json &j);

/// Reads and parses a JSON file. Throws ParseError when the file cannot be opened or
/// is not valid JSON.
nlohmann::json read_json_file(const std::filesystem::path &path);
/// Two-space indented JSON with each matrix row kept on a single line.
std::string format_json(const nlohmann::json &j);
void write_json_file(const std::filesystem::path &path, const nlohmann::json &j);

QuantumChannel parse_channel_file(const std::filesystem::path &path);
CodeIsometry parse_code_file(const std::filesystem::path &path, double tol = Tolerances{}.isometry);

}  // namespace qrecover

#endif
