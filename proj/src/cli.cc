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

#include "qrecover/cli.h"

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrecover/errors.h"
#include "qrecover/fixtures.h"
#include "qrecover/kl_verifier.h"
#include "qrecover/recovery.h"
#include "qrecover/serialization.h"

namespace qrecover {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void print_pair_table(const KLReport &report, std::ostream &err) {
    err << "per-pair residuals ||W^dag F_i^dag F_j W - lambda_ij I||_F:\n";
    for (const auto &row : report.pair_residuals) {
        for (double x : row) {
            err << std::setw(12) << std::setprecision(4) << std::scientific << x;
        }
        err << "\n";
    }
    err << std::defaultfloat;
}

void emit(std::ostream &out, const json &j) {
    out << format_json(j) << "\n";
}

void print_verdict(const KLReport &report, std::ostream &err) {
    err << "verdict: " << (report.correctable ? "correctable" : "NOT correctable")
        << " (relative residual " << report.relative_residual << ", tol " << report.tol << ")\n";
    if (report.spectrum) {
        err << "q = " << report.spectrum->q << ", gamma = tr xi = " << report.spectrum->gamma << "\n";
    } else {
        print_pair_table(report, err);
    }
}

struct SharedOptions {
    std::string channel_file;
    std::string code_file;
    Tolerances tol;
};

void add_input_options(CLI::App *cmd, SharedOptions &opts) {
    cmd->add_option("channel", opts.channel_file, "Channel document (JSON)")->required();
    cmd->add_option("code", opts.code_file, "Code isometry document (JSON)")->required();
    cmd->add_option("--tol", opts.tol.correctable, "Relative Knill-Laflamme tolerance")->capture_default_str();
    cmd->add_option("--rank-tol", opts.tol.rank, "Relative eigenvalue cutoff for the rank of Lambda")
        ->capture_default_str();
}

int cmd_verify(const SharedOptions &opts, const std::string &out_file, std::ostream &out, std::ostream &err) {
    auto start = Clock::now();
    auto phi = parse_channel_file(opts.channel_file);
    auto code = parse_code_file(opts.code_file, opts.tol.isometry);
    auto report = verify_correctable(phi, code, opts.tol);
    auto doc = make_report_document(report, phi.size(), opts.tol, nullptr, elapsed_ms(start));
    auto j = report_to_json(doc);
    emit(out, j);
    if (!out_file.empty()) {
        write_json_file(out_file, j);
    }
    print_verdict(report, err);
    return report.correctable ? kExitOk : kExitNegative;
}

int cmd_construct(const SharedOptions &opts, const std::string &out_file, std::ostream &out, std::ostream &err) {
    auto start = Clock::now();
    auto phi = parse_channel_file(opts.channel_file);
    auto code = parse_code_file(opts.code_file, opts.tol.isometry);
    auto report = verify_correctable(phi, code, opts.tol);
    print_verdict(report, err);
    if (!report.correctable) {
        emit(out, report_to_json(make_report_document(report, phi.size(), opts.tol, nullptr, elapsed_ms(start))));
        return kExitNegative;
    }
    auto plan = build_recovery(phi, code, report, opts.tol);
    auto doc = make_report_document(report, phi.size(), opts.tol, &plan, elapsed_ms(start));
    emit(out, report_to_json(doc));
    if (!out_file.empty()) {
        write_json_file(out_file, plan_to_json(plan));
        err << "plan written to " << out_file << "\n";
    }
    return kExitOk;
}

int cmd_roundtrip(
    const SharedOptions &opts, size_t trials, uint64_t seed, double threshold, std::ostream &out, std::ostream &err) {
    auto start = Clock::now();
    auto phi = parse_channel_file(opts.channel_file);
    auto code = parse_code_file(opts.code_file, opts.tol.isometry);
    auto report = verify_correctable(phi, code, opts.tol);
    if (!report.correctable) {
        print_verdict(report, err);
        emit(out, json{{"verdict", "not_correctable"}, {"relative_residual", report.relative_residual}});
        return kExitNegative;
    }
    auto plan = build_recovery(phi, code, report, opts.tol);
    double worst = oracle_roundtrip(phi, code, plan, trials, seed);
    bool pass = worst <= threshold;
    emit(out, json{
                  {"verdict", "correctable"},
                  {"trials", trials},
                  {"seed", seed},
                  {"threshold", threshold},
                  {"worst_error", worst},
                  {"pass", pass},
                  {"timing_ms", elapsed_ms(start)},
              });
    err << "worst round-trip error " << worst << " over " << trials << " trials ("
        << (pass ? "pass" : "FAIL") << ")\n";
    return pass ? kExitOk : kExitNegative;
}

int cmd_extend(
    const std::string &plan_file, const std::string &channel_file, const Tolerances &tol, std::ostream &out,
    std::ostream &err) {
    auto plan = parse_plan(read_json_file(plan_file), tol.isometry);
    auto phi = parse_channel_file(channel_file);
    try {
        auto ext = extend_plan(plan, phi, tol);
        emit(out, json{
                      {"verdict", "in_span"},
                      {"xi_tilde", matrix_to_json(ext.xi_tilde)},
                      {"coeffs", matrix_to_json(ext.coeffs)},
                      {"residual", ext.residual},
                      {"trace_xi_tilde", trace(ext.xi_tilde).real()},
                  });
        err << "span residual " << ext.residual << "; xi_tilde =\n" << ext.xi_tilde.str() << "\n";
        return kExitOk;
    } catch (const SpanMembershipError &e) {
        emit(out, json{{"verdict", "outside_span"}, {"residual", e.residual()}});
        err << e.what() << "\n";
        return kExitNegative;
    }
}

int cmd_fixtures_dump(const std::string &name, const std::string &dir, const FixtureOptions &options, std::ostream &err) {
    auto fixture = named_fixture(name, options);
    std::filesystem::create_directories(dir);
    Metadata meta{{"fixture", name}};
    auto channel_path = std::filesystem::path(dir) / (name + ".channel.json");
    write_json_file(channel_path, channel_to_json(fixture.channel, meta));
    err << "wrote " << channel_path.string() << "\n";
    if (fixture.code) {
        auto code_path = std::filesystem::path(dir) / (name + ".code.json");
        write_json_file(code_path, code_to_json(*fixture.code, meta));
        err << "wrote " << code_path.string() << "\n";
    }
    return kExitOk;
}

template <size_t N>
void copy_vector(const std::vector<double> &from, std::array<double, N> &to, const char *flag) {
    if (from.empty()) {
        return;
    }
    if (from.size() != N) {
        throw InvalidArgumentError(std::string(flag) + " expects " + std::to_string(N) + " values");
    }
    std::copy(from.begin(), from.end(), to.begin());
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Knill-Laflamme verification and measurement-free unitary recovery"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    SharedOptions verify_opts;
    std::string verify_out;
    auto *verify = app.add_subcommand("verify", "Check the Knill-Laflamme condition; exit 0 correctable, 2 not");
    add_input_options(verify, verify_opts);
    verify->add_option("--out", verify_out, "Also write the report to this file");

    SharedOptions construct_opts;
    std::string construct_out;
    auto *construct = app.add_subcommand("construct", "Build the recovery unitary and write the plan");
    add_input_options(construct, construct_opts);
    construct->add_option("--out", construct_out, "Plan output file (JSON)");

    SharedOptions roundtrip_opts;
    size_t trials = 50;
    uint64_t seed = 0;
    double threshold = 1e-8;
    auto *roundtrip = app.add_subcommand("roundtrip", "Recover random data states and report the worst error");
    add_input_options(roundtrip, roundtrip_opts);
    roundtrip->add_option("--trials", trials, "Number of random data states")->capture_default_str();
    roundtrip->add_option("--seed", seed, "RNG seed")->capture_default_str();
    roundtrip->add_option("--threshold", threshold, "Pass threshold on the worst error")->capture_default_str();

    std::string plan_file;
    std::string new_channel_file;
    Tolerances extend_tol;
    auto *extend = app.add_subcommand("extend", "Reuse a plan for a channel built from linear combinations");
    extend->add_option("plan", plan_file, "Plan document written by construct")->required();
    extend->add_option("channel", new_channel_file, "New channel document")->required();
    extend->add_option("--span-tol", extend_tol.span, "Relative span-membership tolerance")->capture_default_str();

    auto *fixtures = app.add_subcommand("fixtures", "List or dump the built-in fixtures");
    fixtures->require_subcommand(1);
    auto *fixtures_list = fixtures->add_subcommand("list", "List fixture names");
    std::string dump_name;
    std::string dump_dir = ".";
    std::vector<double> p_values;
    std::vector<double> p_tilde_values;
    std::vector<double> t_values;
    FixtureOptions fixture_options;
    auto *fixtures_dump = fixtures->add_subcommand("dump", "Write <name>.channel.json and <name>.code.json");
    fixtures_dump->add_option("name", dump_name, "Fixture name")->required();
    fixtures_dump->add_option("--out-dir", dump_dir, "Output directory")->capture_default_str();
    fixtures_dump->add_option("--p", p_values, "Bit-flip probabilities p0,p1,p2,p3")->delimiter(',');
    fixtures_dump->add_option("--p-tilde", p_tilde_values, "Rotation-channel probabilities")->delimiter(',');
    fixtures_dump->add_option("--t", t_values, "Rotation angles t1,t2,t3")->delimiter(',');
    fixtures_dump->add_option("--n", fixture_options.n, "Ambient dimension (random, identity)");
    fixtures_dump->add_option("--k", fixture_options.k, "Code dimension (random)");
    fixtures_dump->add_option("--q", fixture_options.q, "Gram rank (random)");
    fixtures_dump->add_option("--seed", fixture_options.seed, "RNG seed (random)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*verify) {
            return cmd_verify(verify_opts, verify_out, out, err);
        }
        if (*construct) {
            return cmd_construct(construct_opts, construct_out, out, err);
        }
        if (*roundtrip) {
            return cmd_roundtrip(roundtrip_opts, trials, seed, threshold, out, err);
        }
        if (*extend) {
            return cmd_extend(plan_file, new_channel_file, extend_tol, out, err);
        }
        if (*fixtures_list) {
            for (const auto &name : fixture_names()) {
                out << name << "\n";
            }
            return kExitOk;
        }
        if (*fixtures_dump) {
            copy_vector(p_values, fixture_options.p, "--p");
            copy_vector(p_tilde_values, fixture_options.p_tilde, "--p-tilde");
            copy_vector(t_values, fixture_options.t, "--t");
            return cmd_fixtures_dump(dump_name, dump_dir, fixture_options, err);
        }
    } catch (const NotCorrectableError &e) {
        err << "error: " << e.what() << "\n";
        return kExitNegative;
    } catch (const NotIsometryError &e) {
        err << "error: isometry violation (residual " << e.residual() << "): " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const nlohmann::json::exception &e) {
        err << "error: malformed document: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace qrecover
