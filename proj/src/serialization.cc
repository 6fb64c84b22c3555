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

#include "qrecover/serialization.h"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "qrecover/errors.h"

namespace qrecover {

using nlohmann::json;

namespace {

const json &require_field(const json &j, const char *key, const std::string &what) {
    if (!j.is_object()) {
        throw ParseError(what + ": expected a JSON object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(what + ": missing field '" + key + "'");
    }
    return *it;
}

size_t require_count(const json &j, const char *key, const std::string &what) {
    const auto &v = require_field(j, key, what);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<int64_t>() >= 0)) {
        throw ParseError(what + ": field '" + key + "' must be a non-negative integer");
    }
    return v.get<size_t>();
}

double require_number(const json &j, const char *key, const std::string &what) {
    const auto &v = require_field(j, key, what);
    if (!v.is_number()) {
        throw ParseError(what + ": field '" + key + "' must be a number");
    }
    return v.get<double>();
}

Metadata parse_metadata(const json &j, const std::string &what) {
    Metadata out;
    auto it = j.find("metadata");
    if (it == j.end() || it->is_null()) {
        return out;
    }
    if (!it->is_object()) {
        throw ParseError(what + ": 'metadata' must be an object");
    }
    for (const auto &[key, value] : it->items()) {
        out[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
    return out;
}

json real_matrix_to_json(const std::vector<std::vector<double>> &m) {
    json out = json::array();
    for (const auto &row : m) {
        out.push_back(row);
    }
    return out;
}

std::vector<std::vector<double>> real_matrix_from_json(const json &j, const std::string &what) {
    if (!j.is_array()) {
        throw ParseError(what + ": expected a list of rows");
    }
    std::vector<std::vector<double>> out;
    for (const auto &row : j) {
        if (!row.is_array()) {
            throw ParseError(what + ": expected a list of rows");
        }
        std::vector<double> r;
        for (const auto &x : row) {
            if (!x.is_number()) {
                throw ParseError(what + ": entries must be numbers");
            }
            r.push_back(x.get<double>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (size_t c = 0; c < m.cols(); c++) {
            row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json &j, const std::string &what) {
    if (!j.is_array()) {
        throw ParseError(what + ": expected a list of rows");
    }
    const size_t rows = j.size();
    size_t cols = 0;
    std::vector<Complex> entries;
    for (size_t r = 0; r < rows; r++) {
        const auto &row = j[r];
        if (!row.is_array()) {
            throw ParseError(what + ": row " + std::to_string(r) + " is not a list");
        }
        if (r == 0) {
            cols = row.size();
        } else if (row.size() != cols) {
            throw DimensionError(
                what + ": row " + std::to_string(r) + " has " + std::to_string(row.size()) + " entries, expected " +
                std::to_string(cols));
        }
        for (size_t c = 0; c < row.size(); c++) {
            const auto &z = row[c];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw ParseError(
                    what + ": entry (" + std::to_string(r) + ", " + std::to_string(c) + ") must be [re, im]");
            }
            Complex value(z[0].get<double>(), z[1].get<double>());
            if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
                throw ParseError(what + ": entry (" + std::to_string(r) + ", " + std::to_string(c) + ") is not finite");
            }
            entries.push_back(value);
        }
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

json channel_to_json(const QuantumChannel &phi, const Metadata &metadata) {
    json kraus = json::array();
    for (const auto &f : phi.kraus()) {
        kraus.push_back(matrix_to_json(f));
    }
    return json{{"dim", phi.dim()}, {"kraus", std::move(kraus)}, {"metadata", metadata}};
}

QuantumChannel parse_channel(const json &j) {
    const std::string what = "channel";
    const size_t dim = require_count(j, "dim", what);
    const auto &list = require_field(j, "kraus", what);
    if (!list.is_array() || list.empty()) {
        throw ParseError(what + ": 'kraus' must be a non-empty list of matrices");
    }
    parse_metadata(j, what);
    std::vector<ComplexMatrix> kraus;
    for (size_t i = 0; i < list.size(); i++) {
        auto f = matrix_from_json(list[i], "kraus[" + std::to_string(i) + "]");
        if (f.rows() != dim || f.cols() != dim) {
            throw DimensionError(
                "kraus[" + std::to_string(i) + "] is " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()) +
                " but dim is " + std::to_string(dim));
        }
        kraus.push_back(std::move(f));
    }
    return QuantumChannel(std::move(kraus));
}

json code_to_json(const CodeIsometry &code, const Metadata &metadata) {
    return json{
        {"ambient_dim", code.ambient_dim()},
        {"code_dim", code.code_dim()},
        {"w", matrix_to_json(code.w())},
        {"metadata", metadata},
    };
}

CodeIsometry parse_code(const json &j, double tol) {
    const std::string what = "code";
    const size_t n = require_count(j, "ambient_dim", what);
    const size_t k = require_count(j, "code_dim", what);
    parse_metadata(j, what);
    auto w = matrix_from_json(require_field(j, "w", what), "w");
    if (w.rows() != n || w.cols() != k) {
        throw DimensionError(
            "code: w is " + std::to_string(w.rows()) + "x" + std::to_string(w.cols()) + " but ambient_dim x code_dim is " +
            std::to_string(n) + "x" + std::to_string(k));
    }
    return CodeIsometry(std::move(w), tol);
}

json plan_to_json(const RecoveryPlan &plan) {
    json kraus = json::array();
    for (const auto &f : plan.rotated_kraus) {
        kraus.push_back(matrix_to_json(f));
    }
    return json{
        {"kind", "recovery_plan"},
        {"version", kVersion},
        {"n", plan.ambient_dim()},
        {"k", plan.code_dim()},
        {"q", plan.q},
        {"gamma", plan.gamma},
        {"r", matrix_to_json(plan.r_unitary)},
        {"xi", matrix_to_json(plan.xi)},
        {"w", matrix_to_json(plan.code.w())},
        {"rotated_kraus", std::move(kraus)},
    };
}

RecoveryPlan parse_plan(const json &j, double tol) {
    const std::string what = "plan";
    const size_t n = require_count(j, "n", what);
    const size_t k = require_count(j, "k", what);
    const size_t q = require_count(j, "q", what);
    const double gamma = require_number(j, "gamma", what);
    auto r = matrix_from_json(require_field(j, "r", what), "plan.r");
    auto xi = matrix_from_json(require_field(j, "xi", what), "plan.xi");
    auto w = matrix_from_json(require_field(j, "w", what), "plan.w");
    const auto &list = require_field(j, "rotated_kraus", what);
    if (!list.is_array()) {
        throw ParseError("plan: 'rotated_kraus' must be a list of matrices");
    }
    std::vector<ComplexMatrix> kraus;
    for (size_t i = 0; i < list.size(); i++) {
        kraus.push_back(matrix_from_json(list[i], "plan.rotated_kraus[" + std::to_string(i) + "]"));
        if (kraus.back().rows() != n || kraus.back().cols() != n) {
            throw DimensionError("plan: rotated_kraus[" + std::to_string(i) + "] is not n x n");
        }
    }
    if (r.rows() != n || r.cols() != n || xi.rows() != q || xi.cols() != q || w.rows() != n || w.cols() != k ||
        kraus.size() < q || q * k > n) {
        throw DimensionError("plan: inconsistent dimensions");
    }
    return RecoveryPlan{
        .r_unitary = std::move(r),
        .xi = std::move(xi),
        .q = q,
        .code = CodeIsometry(std::move(w), tol),
        .rotated_kraus = std::move(kraus),
        .gamma = gamma,
    };
}

json tolerances_to_json(const Tolerances &tol) {
    return json{
        {"factorization", tol.factorization},
        {"correctable", tol.correctable},
        {"rank", tol.rank},
        {"span", tol.span},
        {"density", tol.density},
        {"isometry", tol.isometry},
        {"trace_preserving", tol.trace_preserving},
    };
}

Tolerances tolerances_from_json(const json &j) {
    const std::string what = "tolerances";
    Tolerances tol;
    tol.factorization = require_number(j, "factorization", what);
    tol.correctable = require_number(j, "correctable", what);
    tol.rank = require_number(j, "rank", what);
    tol.span = require_number(j, "span", what);
    tol.density = require_number(j, "density", what);
    tol.isometry = require_number(j, "isometry", what);
    tol.trace_preserving = require_number(j, "trace_preserving", what);
    return tol;
}

ReportDocument make_report_document(
    const KLReport &report, size_t kraus_count, const Tolerances &tol, const RecoveryPlan *plan, double timing_ms) {
    ReportDocument doc;
    doc.correctable = report.correctable;
    doc.ambient_dim = report.ambient_dim;
    doc.code_dim = report.code_dim;
    doc.kraus_count = kraus_count;
    doc.residual = report.residual;
    doc.relative_residual = report.relative_residual;
    doc.hermiticity_residual = report.hermiticity_residual;
    doc.pair_residuals = report.pair_residuals;
    doc.lambda = report.lambda;
    if (report.spectrum) {
        doc.eigenvalues = report.spectrum->eigenvalues;
        doc.xi = report.spectrum->xi;
        doc.q = report.spectrum->q;
        doc.gamma = report.spectrum->gamma;
    }
    if (plan != nullptr) {
        doc.r_unitary = plan->r_unitary;
    }
    doc.tolerances = tol;
    doc.timing_ms = timing_ms;
    return doc;
}

json report_to_json(const ReportDocument &doc) {
    json j{
        {"kind", "kl_report"},
        {"version", doc.version},
        {"verdict", doc.correctable ? "correctable" : "not_correctable"},
        {"ambient_dim", doc.ambient_dim},
        {"code_dim", doc.code_dim},
        {"kraus_count", doc.kraus_count},
        {"residual", doc.residual},
        {"relative_residual", doc.relative_residual},
        {"hermiticity_residual", doc.hermiticity_residual},
        {"pair_residuals", real_matrix_to_json(doc.pair_residuals)},
        {"lambda", matrix_to_json(doc.lambda)},
        {"tolerances", tolerances_to_json(doc.tolerances)},
        {"timing_ms", doc.timing_ms},
    };
    if (doc.eigenvalues) {
        j["eigenvalues"] = *doc.eigenvalues;
    }
    if (doc.xi) {
        j["xi"] = matrix_to_json(*doc.xi);
    }
    if (doc.q) {
        j["q"] = *doc.q;
    }
    if (doc.gamma) {
        j["gamma"] = *doc.gamma;
    }
    if (doc.r_unitary) {
        j["r"] = matrix_to_json(*doc.r_unitary);
    }
    return j;
}

ReportDocument report_from_json(const json &j) {
    const std::string what = "report";
    ReportDocument doc;
    const auto &version = require_field(j, "version", what);
    const auto &verdict = require_field(j, "verdict", what);
    if (!version.is_string() || !verdict.is_string()) {
        throw ParseError("report: 'version' and 'verdict' must be strings");
    }
    doc.version = version.get<std::string>();
    auto v = verdict.get<std::string>();
    if (v != "correctable" && v != "not_correctable") {
        throw ParseError("report: unknown verdict '" + v + "'");
    }
    doc.correctable = v == "correctable";
    doc.ambient_dim = require_count(j, "ambient_dim", what);
    doc.code_dim = require_count(j, "code_dim", what);
    doc.kraus_count = require_count(j, "kraus_count", what);
    doc.residual = require_number(j, "residual", what);
    doc.relative_residual = require_number(j, "relative_residual", what);
    doc.hermiticity_residual = require_number(j, "hermiticity_residual", what);
    doc.pair_residuals = real_matrix_from_json(require_field(j, "pair_residuals", what), "report.pair_residuals");
    doc.lambda = matrix_from_json(require_field(j, "lambda", what), "report.lambda");
    doc.tolerances = tolerances_from_json(require_field(j, "tolerances", what));
    doc.timing_ms = require_number(j, "timing_ms", what);
    if (j.contains("eigenvalues")) {
        doc.eigenvalues = j["eigenvalues"].get<std::vector<double>>();
    }
    if (j.contains("xi")) {
        doc.xi = matrix_from_json(j["xi"], "report.xi");
    }
    if (j.contains("q")) {
        doc.q = require_count(j, "q", what);
    }
    if (j.contains("gamma")) {
        doc.gamma = require_number(j, "gamma", what);
    }
    if (j.contains("r")) {
        doc.r_unitary = matrix_from_json(j["r"], "report.r");
    }
    return doc;
}

json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
    }
}

namespace {

bool is_flat(const json &j) {
    if (!j.is_array()) {
        return j.is_primitive();
    }
    for (const auto &e : j) {
        if (!e.is_primitive() && !(e.is_array() && std::all_of(e.begin(), e.end(), [](const json &x) {
                                       return x.is_primitive();
                                   }))) {
            return false;
        }
    }
    return true;
}

void format_into(const json &j, size_t depth, std::string &out) {
    const std::string pad(2 * (depth + 1), ' ');
    if (j.empty() || is_flat(j)) {
        out += j.dump();
        return;
    }
    bool object = j.is_object();
    out += object ? "{\n" : "[\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        out += first ? "" : ",\n";
        first = false;
        out += pad;
        if (object) {
            out += json(it.key()).dump() + ": ";
        }
        format_into(it.value(), depth + 1, out);
    }
    out += "\n" + std::string(2 * depth, ' ') + (object ? "}" : "]");
}

}  // namespace

std::string format_json(const json &j) {
    std::string out;
    format_into(j, 0, out);
    return out;
}

void write_json_file(const std::filesystem::path &path, const json &j) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    out << format_json(j) << "\n";
}

QuantumChannel parse_channel_file(const std::filesystem::path &path) {
    return parse_channel(read_json_file(path));
}

CodeIsometry parse_code_file(const std::filesystem::path &path, double tol) {
    return parse_code(read_json_file(path), tol);
}

}  // namespace qrecover
