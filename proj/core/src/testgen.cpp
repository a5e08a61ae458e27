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

#include "fejer/testgen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "fejer/errors.hpp"
#include "fejer/factorizer.hpp"
#include "fejer/verifier.hpp"

namespace fejer {

namespace {

constexpr int kMaxAttempts = 10;
constexpr double kMinRescale = 1e-3;
constexpr double kMarginSlack = 1e-6;

double condition_estimate(const HermitianLaurentPolynomial& s) {
    const auto samples = sample_on_grid(s, verification_grid_size(s.order()));
    Eigen::SelfAdjointEigenSolver<MatrixCoefficient> eig;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto& v : samples.samples()) {
        eig.compute(v, Eigen::EigenvaluesOnly);
        lo = std::min(lo, eig.eigenvalues().minCoeff());
        hi = std::max(hi, eig.eigenvalues().maxCoeff());
    }
    if (!(lo > 0.0)) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

double min_root_modulus(const MatrixPolynomial& x) { return check_outer_determinant(x).min_root_modulus; }

std::optional<InstanceBundle> try_draw(int r, int m, std::uint64_t seed, double root_margin) {
    Rng rng(seed);
    std::vector<MatrixCoefficient> coeffs;
    coeffs.reserve(static_cast<std::size_t>(m + 1));
    for (int n = 0; n <= m; ++n) {
        MatrixCoefficient c(r, r);
        // Column-major draw order.
        for (int b = 0; b < r; ++b)
            for (int a = 0; a < r; ++a) c(a, b) = rng.complex_normal();
        coeffs.push_back(std::move(c));
    }
    MatrixPolynomial raw(coeffs);
    if (raw.degree() != m) return std::nullopt;

    double t = 1.0;
    try {
        const double target = (1.0 + root_margin) * (1.0 + kMarginSlack);
        const double mod = min_root_modulus(raw);
        if (mod < target) t = mod / target;
    } catch (const Error&) {
        return std::nullopt;
    }
    if (t < kMinRescale) return std::nullopt;
    double power = 1.0;
    for (auto& c : coeffs) {
        c *= power;
        power *= t;
    }
    MatrixPolynomial scaled(std::move(coeffs));
    if (scaled.degree() != m) return std::nullopt;

    try {
        auto truth = canonical_normalize(scaled).factor;
        auto spectrum = multiply_by_adjoint(truth);
        if (spectrum.order() != m) return std::nullopt;
        const double margin = min_root_modulus(truth) - 1.0;
        if (margin < root_margin) return std::nullopt;
        const double cond = condition_estimate(spectrum);
        return InstanceBundle{std::move(spectrum), std::move(truth), seed, margin, cond};
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

// ---------------------------------------------------------------------------

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(splitmix64(seed + stream)) {}

std::uint64_t Rng::splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double Rng::uniform() {
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return Complex{re, im} * std::numbers::sqrt2 * 0.5;
}

// ---------------------------------------------------------------------------

InstanceBundle generate_instance(int r, int m, std::uint64_t seed, double root_margin) {
    if (r < 1 || m < 0) throw Error(ErrorCode::InvalidArgument, "need r >= 1 and m >= 0");
    if (!(root_margin > 0.0) || !std::isfinite(root_margin))
        throw Error(ErrorCode::InvalidArgument, "root margin must be positive");
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        if (auto bundle = try_draw(r, m, seed + static_cast<std::uint64_t>(attempt), root_margin)) {
            bundle->seed = seed;
            bundle->attempts = attempt + 1;
            return std::move(*bundle);
        }
    }
    throw Error(ErrorCode::RetryExhausted, "no usable draw in " + std::to_string(kMaxAttempts) + " attempts");
}

InstanceBundle generate_boundary_instance(int r, int m, std::uint64_t seed) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "boundary instances need m >= 1");
    const auto base = generate_instance(r, m - 1, seed, 0.2);
    Rng rng(seed, 0x626f756e64617279ULL);
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    const auto channel = static_cast<Eigen::Index>(rng.next_u64() % static_cast<std::uint64_t>(r));

    const double half = std::numbers::sqrt2 * 0.5;
    MatrixCoefficient b0 = MatrixCoefficient::Identity(r, r);
    b0(channel, channel) = half;
    MatrixCoefficient b1 = MatrixCoefficient::Zero(r, r);
    b1(channel, channel) = std::polar(half, -theta);

    const auto& rho = base.ground_truth.coeffs();
    std::vector<MatrixCoefficient> product(static_cast<std::size_t>(m + 1), MatrixCoefficient::Zero(r, r));
    for (std::size_t n = 0; n < rho.size(); ++n) {
        product[n].noalias() += rho[n] * b0;
        product[n + 1].noalias() += rho[n] * b1;
    }
    auto truth = canonical_normalize(MatrixPolynomial(std::move(product))).factor;
    auto spectrum = multiply_by_adjoint(truth);
    InstanceBundle out{std::move(spectrum), std::move(truth), seed};
    out.root_margin = min_root_modulus(out.ground_truth) - 1.0;
    out.condition_estimate = condition_estimate(out.spectrum);
    out.boundary = true;
    out.attempts = base.attempts;
    return out;
}

}  // namespace fejer
