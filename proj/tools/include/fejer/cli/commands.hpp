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

#ifndef FEJER_CLI_COMMANDS_HPP
#define FEJER_CLI_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fejer/verifier.hpp"

namespace fejer::cli {

// Process exit statuses; a stable contract for scripts.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;         // parse, I/O and argument errors
inline constexpr int kExitNotPositive = 2;   // NotPositiveDefinite, DegenerateDeterminant
inline constexpr int kExitNoConvergence = 3; // best iterate still written
inline constexpr int kExitVerifyFailed = 4;

std::string_view tool_version() noexcept;

struct FactorCommand {
    std::string input;
    std::string output;
    std::string algorithm = "auto";
    std::optional<double> tol;
    std::optional<int> grid;
};

struct VerifyCommand {
    std::string spectrum;
    std::string factor;
    bool json = false;
    std::optional<double> tol;
    std::optional<int> grid;
};

struct GenCommand {
    int r = 1;
    int m = 1;
    std::uint64_t seed = 0;
    double margin = 0.2;
    std::string prefix;
    bool boundary = false;
};

int cmd_factor(const FactorCommand& c, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyCommand& c, std::ostream& out, std::ostream& err);
int cmd_gen(const GenCommand& c, std::ostream& out, std::ostream& err);

// Aligned text table: check, measured, tolerance, status, detail.
std::string render_report_table(const VerificationReport& report);
std::string render_report_json(const VerificationReport& report);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fejer::cli

#endif  // FEJER_CLI_COMMANDS_HPP
