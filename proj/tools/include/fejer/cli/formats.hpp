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

#ifndef FEJER_CLI_FORMATS_HPP
#define FEJER_CLI_FORMATS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fejer/laurent.hpp"

namespace fejer::cli {

// Malformed or inconsistent file contents.
class FormatError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kSpectrumFormat = "fejer-spectrum";
inline constexpr std::string_view kFactorFormat = "fejer-factor";
inline constexpr int kFormatVersion = 1;

// Positive and negative index copies of a spectrum coefficient must agree
// to this absolute per-entry tolerance.
inline constexpr double kMirrorTolerance = 1e-9;

// Scalar metadata value: string, number (null when non-finite), bool or integer.
struct MetaValue {
    enum class Kind { string, number, integer, boolean, string_list } kind = Kind::string;
    std::string text;
    double number = 0.0;
    long long integer = 0;
    bool flag = false;
    std::vector<std::string> list;

    static MetaValue of(std::string s) { return {Kind::string, std::move(s), 0.0, 0, false, {}}; }
    static MetaValue of(double v) { return {Kind::number, {}, v, 0, false, {}}; }
    static MetaValue of_int(long long v) { return {Kind::integer, {}, 0.0, v, false, {}}; }
    static MetaValue of(bool v) { return {Kind::boolean, {}, 0.0, 0, v, {}}; }
    static MetaValue of(std::vector<std::string> v) { return {Kind::string_list, {}, 0.0, 0, false, std::move(v)}; }
};

using Metadata = std::vector<std::pair<std::string, MetaValue>>;

struct FactorMetadata {
    std::string algorithm;
    double residual = 0.0;
    std::vector<std::string> warnings;
    std::string tool_version;
    bool converged = true;
    int iterations = 0;
};

struct FactorFile {
    MatrixPolynomial factor;
    FactorMetadata metadata;
};

// %.17g, the shortest fixed-width form that round-trips every double.
std::string format_double(double v);

HermitianLaurentPolynomial parse_spectrum(std::string_view text);
std::string write_spectrum(const HermitianLaurentPolynomial& s, const Metadata& metadata = {});

FactorFile parse_factor(std::string_view text);
std::string write_factor(const FactorFile& file);

// Whole-file I/O; throws FormatError with the path on failure.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace fejer::cli

#endif  // FEJER_CLI_FORMATS_HPP
