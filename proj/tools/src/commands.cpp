// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The fejer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "fejer/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fejer/cli/formats.hpp"
#include "fejer/errors.hpp"
#include "fejer/factorizer.hpp"
#include "fejer/testgen.hpp"

#ifndef FEJER_VERSION
#define FEJER_VERSION "0.0.0"
#endif

namespace fejer::cli {

namespace {

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPositiveDefinite:
        case ErrorCode::DegenerateDeterminant:
        case ErrorCode::CholeskyBreakdown:
        case ErrorCode::OddBoundaryMultiplicity:
            return kExitNotPositive;
        case ErrorCode::NoConvergence:
        case ErrorCode::SingularIterate:
        case ErrorCode::SingularLeadingCoefficient:
            return kExitNoConvergence;
        default:
            return kExitUsage;
    }
}

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

}  // namespace

std::string_view tool_version() noexcept { return FEJER_VERSION; }

// ---------------------------------------------------------------------------

int cmd_factor(const FactorCommand& c, std::ostream& out, std::ostream& err) {
    FactorizationOptions opts;
    const auto algorithm = parse_algorithm(c.algorithm);
    if (!algorithm) {
        err << "error: unknown algorithm '" << c.algorithm << "' (expected auto, bauer, wilson or roots)\n";
        return kExitUsage;
    }
    opts.algorithm = *algorithm;
    if (c.tol) opts.residual_tol = *c.tol;
    opts.grid_size = c.grid;

    std::optional<HermitianLaurentPolynomial> spectrum;
    try {
        spectrum = parse_spectrum(read_text_file(c.input));
        opts.validate();
    } catch (const FormatError& e) {
        err << "error: " << c.input << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << c.input << ": " << e.what() << '\n';
        return kExitUsage;
    }

    FactorFile file{MatrixPolynomial::identity(spectrum->dim()), {}};
    file.metadata.tool_version = std::string(tool_version());
    int status = kExitOk;
    try {
        auto result = factor(*spectrum, opts);
        file.factor = std::move(result.factor);
        file.metadata.algorithm = std::string(to_string(result.algorithm_used));
        file.metadata.residual = result.achieved_residual;
        file.metadata.warnings = std::move(result.warnings);
        file.metadata.iterations = result.iterations_or_blocks;
    } catch (const NoConvergenceError& e) {
        file.factor = e.best();
        file.metadata.algorithm = c.algorithm;
        file.metadata.residual = e.residual();
        file.metadata.converged = false;
        file.metadata.iterations = e.iterations();
        file.metadata.warnings.push_back(e.what());
        status = kExitNoConvergence;
        err << "error: " << e.what() << " (best iterate written, residual " << short_number(e.residual()) << ")\n";
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }

    try {
        write_text_file(c.output, write_factor(file));
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    for (const auto& w : file.metadata.warnings)
        if (status == kExitOk) err << "warning: " << w << '\n';
    out << "algorithm=" << file.metadata.algorithm << " degree=" << file.factor.degree()
        << " residual=" << format_double(file.metadata.residual) << " iterations=" << file.metadata.iterations
        << (file.metadata.converged ? "" : " converged=false") << '\n';
    return status;
}

// ---------------------------------------------------------------------------

std::string render_report_table(const VerificationReport& report) {
    std::size_t name_width = 5;
    for (const auto& c : report.checks) name_width = std::max(name_width, c.name.size());
    std::ostringstream os;
    auto pad = [](std::string s, std::size_t w) {
        if (s.size() < w) s.append(w - s.size(), ' ');
        return s;
    };
    os << pad("check", name_width) << "  " << pad("measured", 24) << "  " << pad("tolerance", 24) << "  "
       << pad("status", 6) << "  detail\n";
    for (const auto& c : report.checks) {
        os << pad(c.name, name_width) << "  " << pad(format_double(c.measured), 24) << "  "
           << pad(format_double(c.tolerance), 24) << "  " << pad(std::string(to_string(c.status)), 6) << "  "
           << c.detail << '\n';
    }
    os << "overall: " << (report.overall() ? "pass" : "fail");
    if (report.overall() && report.has_warnings()) os << " (with warnings)";
    os << '\n';
    return os.str();
}

std::string render_report_json(const VerificationReport& report) {
    auto quote = [](const std::string& s) { return nlohmann::json(s).dump(); };
    std::ostringstream os;
    os << "{\n  \"overall\": " << (report.overall() ? "true" : "false")
       << ",\n  \"warnings\": " << (report.has_warnings() ? "true" : "false") << ",\n  \"checks\": [\n";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const auto& c = report.checks[i];
        os << "    {\"name\": " << quote(c.name) << ", \"status\": " << quote(std::string(to_string(c.status)))
           << ", \"passed\": " << (c.passed() ? "true" : "false") << ", \"measured\": " << format_double(c.measured)
           << ", \"tolerance\": " << format_double(c.tolerance) << ", \"detail\": " << quote(c.detail) << '}'
           << (i + 1 < report.checks.size() ? ",\n" : "\n");
    }
    os << "  ]\n}\n";
    return os.str();
}

int cmd_verify(const VerifyCommand& c, std::ostream& out, std::ostream& err) {
    VerifyOptions opts;
    if (c.tol) opts.residual_tol = *c.tol;
    opts.grid_size = c.grid;
    try {
        const auto spectrum = parse_spectrum(read_text_file(c.spectrum));
        const auto file = parse_factor(read_text_file(c.factor));
        if (spectrum.dim() != file.factor.dim()) {
            err << "error: spectrum is " << spectrum.dim() << "x" << spectrum.dim() << " but factor is "
                << file.factor.dim() << "x" << file.factor.dim() << '\n';
            return kExitUsage;
        }
        const auto report = verify_all(spectrum, file.factor, opts);
        out << (c.json ? render_report_json(report) : render_report_table(report));
        if (!report.overall()) return kExitVerifyFailed;
        if (report.has_warnings()) err << "note: warning-grade checks present (boundary zeros or ambiguous roots)\n";
        return kExitOk;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

// ---------------------------------------------------------------------------

int cmd_gen(const GenCommand& c, std::ostream& out, std::ostream& err) {
    if (c.prefix.empty()) {
        err << "error: output prefix must not be empty\n";
        return kExitUsage;
    }
    try {
        const auto bundle =
            c.boundary ? generate_boundary_instance(c.r, c.m, c.seed) : generate_instance(c.r, c.m, c.seed, c.margin);
        const Metadata spectrum_meta{
            {"generator", MetaValue::of(std::string(c.boundary ? "testgen-boundary" : "testgen"))},
            {"seed", bundle.seed <= static_cast<std::uint64_t>(std::numeric_limits<long long>::max())
                         ? MetaValue::of_int(static_cast<long long>(bundle.seed))
                         : MetaValue::of(std::to_string(bundle.seed))},
            {"root_margin", MetaValue::of(bundle.root_margin)},
            {"condition_estimate", MetaValue::of(bundle.condition_estimate)},
            {"boundary", MetaValue::of(bundle.boundary)},
            {"tool_version", MetaValue::of(std::string(tool_version()))},
        };
        FactorFile truth{bundle.ground_truth, {}};
        truth.metadata.algorithm = "testgen";
        truth.metadata.residual = check_factorization(bundle.spectrum, bundle.ground_truth);
        truth.metadata.tool_version = std::string(tool_version());
        truth.metadata.iterations = bundle.attempts;
        if (bundle.boundary) truth.metadata.warnings.push_back("ground truth has a determinant root on the unit circle");

        write_text_file(c.prefix + ".spectrum", write_spectrum(bundle.spectrum, spectrum_meta));
        write_text_file(c.prefix + ".truth", write_factor(truth));
        out << "root_margin=" << format_double(bundle.root_margin)
            << " condition_estimate=" << format_double(bundle.condition_estimate) << '\n';
        return kExitOk;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitUsage;
}

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Matrix spectral factorization of para-Hermitian Laurent polynomials", "fejer"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);

    FactorCommand fc;
    auto* factor_cmd = app.add_subcommand("factor", "Compute the canonical spectral factor of a spectrum file");
    factor_cmd->add_option("input", fc.input, "Spectrum file")->required();
    factor_cmd->add_option("output", fc.output, "Factor file to write")->required();
    factor_cmd->add_option("--algorithm", fc.algorithm, "auto, bauer, wilson or roots")
        ->check(CLI::IsMember({"auto", "bauer", "wilson", "roots"}));
    factor_cmd->add_option("--tol", fc.tol, "Residual tolerance")->check(CLI::PositiveNumber);
    factor_cmd->add_option("--grid", fc.grid, "Grid size for Wilson (power of two)");

    VerifyCommand vc;
    auto* verify_cmd = app.add_subcommand("verify", "Check a factor against a spectrum");
    verify_cmd->add_option("spectrum", vc.spectrum, "Spectrum file")->required();
    verify_cmd->add_option("factor", vc.factor, "Factor file")->required();
    verify_cmd->add_flag("--json", vc.json, "Print the report as JSON");
    verify_cmd->add_option("--tol", vc.tol, "Residual tolerance")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--grid", vc.grid, "Verification grid size (power of two)");

    GenCommand gc;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a ground-truth instance");
    gen_cmd->add_option("prefix", gc.prefix, "Writes <prefix>.spectrum and <prefix>.truth")->required();
    gen_cmd->add_option("-r,--dim", gc.r, "Matrix dimension")->check(CLI::Range(1, 64));
    gen_cmd->add_option("-m,--order", gc.m, "Polynomial order")->check(CLI::Range(0, 4096));
    gen_cmd->add_option("--seed", gc.seed, "Random seed");
    gen_cmd->add_option("--margin", gc.margin, "Minimum det root modulus minus one")->check(CLI::PositiveNumber);
    gen_cmd->add_flag("--boundary", gc.boundary, "Place one det root on the unit circle");

    std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 consumes from the back
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (factor_cmd->parsed()) return cmd_factor(fc, out, err);
    if (verify_cmd->parsed()) return cmd_verify(vc, out, err);
    return cmd_gen(gc, out, err);
}

}  // namespace fejer::cli
