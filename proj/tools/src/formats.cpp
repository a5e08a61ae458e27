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

#include "fejer/cli/formats.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace fejer::cli {

namespace {

using nlohmann::json;

std::string quote(std::string_view s) { return json(std::string(s)).dump(); }

void write_matrix(std::ostringstream& os, const MatrixCoefficient& c) {
    os << '[';
    for (Eigen::Index a = 0; a < c.rows(); ++a) {
        if (a) os << ", ";
        os << '[';
        for (Eigen::Index b = 0; b < c.cols(); ++b) {
            if (b) os << ", ";
            os << '[' << format_double(c(a, b).real()) << ", " << format_double(c(a, b).imag()) << ']';
        }
        os << ']';
    }
    os << ']';
}

void write_value(std::ostringstream& os, const MetaValue& v) {
    switch (v.kind) {
        case MetaValue::Kind::string:
            os << quote(v.text);
            break;
        case MetaValue::Kind::number:
            if (std::isfinite(v.number))
                os << format_double(v.number);
            else
                os << "null";
            break;
        case MetaValue::Kind::integer:
            os << v.integer;
            break;
        case MetaValue::Kind::boolean:
            os << (v.flag ? "true" : "false");
            break;
        case MetaValue::Kind::string_list:
            os << '[';
            for (std::size_t i = 0; i < v.list.size(); ++i) os << (i ? ", " : "") << quote(v.list[i]);
            os << ']';
            break;
    }
}

void write_document(std::ostringstream& os, std::string_view format, int r, int m,
                    const std::vector<MatrixCoefficient>& coeffs, const Metadata& metadata) {
    os << "{\n";
    os << "  \"format\": " << quote(format) << ",\n";
    os << "  \"version\": " << kFormatVersion << ",\n";
    os << "  \"r\": " << r << ",\n";
    os << "  \"m\": " << m << ",\n";
    os << "  \"coeffs\": {\n";
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        os << "    \"" << n << "\": ";
        write_matrix(os, coeffs[n]);
        os << (n + 1 < coeffs.size() ? ",\n" : "\n");
    }
    os << "  }";
    if (!metadata.empty()) {
        os << ",\n  \"metadata\": {\n";
        for (std::size_t i = 0; i < metadata.size(); ++i) {
            os << "    " << quote(metadata[i].first) << ": ";
            write_value(os, metadata[i].second);
            os << (i + 1 < metadata.size() ? ",\n" : "\n");
        }
        os << "  }";
    }
    os << "\n}\n";
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

int require_int(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer())
        throw FormatError(std::string("field '") + key + "' must be an integer");
    return doc[key].get<int>();
}

double require_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw FormatError(where + " must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw FormatError(where + " must be finite");
    return d;
}

MatrixCoefficient parse_matrix(const json& v, int r, const std::string& where) {
    if (!v.is_array() || static_cast<int>(v.size()) != r) throw FormatError(where + " must have " + std::to_string(r) + " rows");
    MatrixCoefficient c(r, r);
    for (int a = 0; a < r; ++a) {
        const auto& row = v[static_cast<std::size_t>(a)];
        if (!row.is_array() || static_cast<int>(row.size()) != r)
            throw FormatError(where + " row " + std::to_string(a) + " must have " + std::to_string(r) + " entries");
        for (int b = 0; b < r; ++b) {
            const auto& entry = row[static_cast<std::size_t>(b)];
            const std::string at = where + "[" + std::to_string(a) + "][" + std::to_string(b) + "]";
            if (!entry.is_array() || entry.size() != 2) throw FormatError(at + " must be an [re, im] pair");
            c(a, b) = Complex{require_number(entry[0], at), require_number(entry[1], at)};
        }
    }
    return c;
}

int parse_index(const std::string& key) {
    int n = 0;
    const auto* first = key.data();
    const auto* last = key.data() + key.size();
    const auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || ptr != last || key.empty()) throw FormatError("coefficient index '" + key + "' is not an integer");
    return n;
}

// Coefficient map keyed by integer index, all within [lo, m].
std::map<int, MatrixCoefficient> parse_coeffs(const json& doc, int r, int lo, int m) {
    if (!doc.contains("coeffs") || !doc["coeffs"].is_object()) throw FormatError("field 'coeffs' must be an object");
    std::map<int, MatrixCoefficient> out;
    for (const auto& [key, value] : doc["coeffs"].items()) {
        const int n = parse_index(key);
        if (n < lo || n > m)
            throw FormatError("coefficient index " + std::to_string(n) + " outside [" + std::to_string(lo) + ", " +
                              std::to_string(m) + "]");
        out.emplace(n, parse_matrix(value, r, "coeffs[\"" + key + "\"]"));
    }
    return out;
}

void check_header(const json& doc, std::string_view format, int& r, int& m) {
    if (!doc.is_object()) throw FormatError("document must be a JSON object");
    if (doc.contains("format") && (!doc["format"].is_string() || doc["format"].get<std::string>() != format))
        throw FormatError("expected format '" + std::string(format) + "'");
    r = require_int(doc, "r");
    m = require_int(doc, "m");
    if (r < 1) throw FormatError("r must be >= 1");
    if (m < 0) throw FormatError("m must be >= 0");
}

}  // namespace

std::string format_double(double v) {
    if (v == 0.0 && std::signbit(v)) return "-0.0";  // "-0" would read back as integer zero
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

HermitianLaurentPolynomial parse_spectrum(std::string_view text) {
    const json doc = parse_json(text);
    int r = 0, m = 0;
    check_header(doc, kSpectrumFormat, r, m);
    auto coeffs = parse_coeffs(doc, r, -m, m);

    std::vector<MatrixCoefficient> sigma;
    sigma.reserve(static_cast<std::size_t>(m + 1));
    for (int n = 0; n <= m; ++n) {
        const auto pos = coeffs.find(n);
        const auto neg = n > 0 ? coeffs.find(-n) : coeffs.end();
        if (pos == coeffs.end() && neg == coeffs.end())
            throw FormatError("coefficient " + std::to_string(n) + " is missing");
        if (pos != coeffs.end() && neg != coeffs.end()) {
            const double gap = (pos->second - neg->second.adjoint()).cwiseAbs().maxCoeff();
            if (gap > kMirrorTolerance)
                throw FormatError("coefficients " + std::to_string(-n) + " and " + std::to_string(n) +
                                  " violate sigma_{-n} = sigma_n^* (gap " + format_double(gap) + ")");
        }
        sigma.push_back(pos != coeffs.end() ? pos->second : MatrixCoefficient(neg->second.adjoint()));
    }
    return HermitianLaurentPolynomial(std::move(sigma));
}

std::string write_spectrum(const HermitianLaurentPolynomial& s, const Metadata& metadata) {
    std::ostringstream os;
    write_document(os, kSpectrumFormat, s.dim(), s.order(), s.nonnegative_coeffs(), metadata);
    return os.str();
}

FactorFile parse_factor(std::string_view text) {
    const json doc = parse_json(text);
    int r = 0, m = 0;
    check_header(doc, kFactorFormat, r, m);
    auto coeffs = parse_coeffs(doc, r, 0, m);
    std::vector<MatrixCoefficient> rho;
    rho.reserve(static_cast<std::size_t>(m + 1));
    for (int n = 0; n <= m; ++n) {
        auto it = coeffs.find(n);
        if (it == coeffs.end()) throw FormatError("coefficient " + std::to_string(n) + " is missing");
        rho.push_back(std::move(it->second));
    }

    FactorFile out{MatrixPolynomial(std::move(rho)), {}};
    if (doc.contains("metadata")) {
        const auto& meta = doc["metadata"];
        if (!meta.is_object()) throw FormatError("field 'metadata' must be an object");
        try {
            out.metadata.algorithm = meta.value("algorithm", std::string{});
            if (meta.contains("residual") && meta["residual"].is_number())
                out.metadata.residual = meta["residual"].get<double>();
            out.metadata.warnings = meta.value("warnings", std::vector<std::string>{});
            out.metadata.tool_version = meta.value("tool_version", std::string{});
            out.metadata.converged = meta.value("converged", true);
            out.metadata.iterations = meta.value("iterations", 0);
        } catch (const json::exception& e) {
            throw FormatError(std::string("malformed metadata: ") + e.what());
        }
    }
    return out;
}

std::string write_factor(const FactorFile& file) {
    const auto& md = file.metadata;
    const Metadata meta{
        {"algorithm", MetaValue::of(md.algorithm)},
        {"residual", MetaValue::of(md.residual)},
        {"converged", MetaValue::of(md.converged)},
        {"iterations", MetaValue::of_int(md.iterations)},
        {"warnings", MetaValue::of(md.warnings)},
        {"tool_version", MetaValue::of(md.tool_version)},
    };
    std::ostringstream os;
    write_document(os, kFactorFormat, file.factor.dim(), file.factor.degree(), file.factor.coeffs(), meta);
    return os.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "' for reading");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot open '" + path + "' for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw FormatError("failed writing '" + path + "'");
}

}  // namespace fejer::cli
