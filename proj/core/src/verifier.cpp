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

#include "fejer/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "fejer/errors.hpp"
#include "fejer/roots.hpp"
#include "linalg.hpp"

namespace fejer {

namespace {

constexpr double kPositivityTolerance = 1e-10;
constexpr double kDegenerateDeterminant = 1e-13;
constexpr double kDeterminantTrim = 1e-13;
constexpr double kSingularGridCondition = 1e10;
constexpr double kUnmeasured = std::numeric_limits<double>::max();

using detail::format_number;

// Scalar samples det(x(z_j)) on a grid large enough to recover degree `top`.
std::vector<Complex> determinant_samples(const SampledMatrixFunction& f) {
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(f.size()));
    for (const auto& v : f.samples()) out.push_back(Eigen::PartialPivLU<MatrixCoefficient>(v).determinant());
    return out;
}

// Sum of squared Frobenius norms of the interpolant coefficients whose index
// lies outside [0, m], relative to the total.
double anticausal_mass(const SampledMatrixFunction& lhs, int m) {
    const int K = lhs.size();
    const auto coeffs = coefficients_from_samples(lhs, 0, K - 1);
    double outside = 0.0;
    double total = 0.0;
    for (int n = 0; n < K; ++n) {
        const double e = coeffs[static_cast<std::size_t>(n)].squaredNorm();
        total += e;
        if (n > m) outside += e;
    }
    return std::sqrt(outside) / (1.0 + std::sqrt(total));
}

void require_invertible_on_grid(const SampledMatrixFunction& f, const char* what) {
    for (int j = 0; j < f.size(); ++j) {
        const double cond = detail::condition_number(f[j]);
        if (!(cond < kSingularGridCondition))
            throw Error(ErrorCode::SingularFactorOnGrid, std::string(what) + " is numerically singular at grid point " +
                                                             std::to_string(j) + " of " + std::to_string(f.size()) +
                                                             " (condition " + format_number(cond) + ")");
    }
}

}  // namespace

std::string_view to_string(CheckStatus status) noexcept {
    switch (status) {
        case CheckStatus::pass:
            return "pass";
        case CheckStatus::warn:
            return "warn";
        case CheckStatus::fail:
            return "fail";
    }
    return "unknown";
}

bool VerificationReport::overall() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.passed(); });
}

bool VerificationReport::has_warnings() const noexcept {
    return std::any_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.warning(); });
}

const CheckEntry* VerificationReport::find(std::string_view name) const noexcept {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

int verification_grid_size(int m) noexcept { return std::max(256, default_grid_size(m)); }

PositivityReport check_positivity(const HermitianLaurentPolynomial& s, int K) {
    const auto samples = sample_on_grid(s, K);
    const int r = s.dim();
    PositivityReport rep;
    rep.min_eigenvalue = std::numeric_limits<double>::infinity();
    rep.min_abs_det = std::numeric_limits<double>::infinity();
    Eigen::SelfAdjointEigenSolver<MatrixCoefficient> eig;
    for (const auto& v : samples.samples()) {
        eig.compute(v, Eigen::EigenvaluesOnly);
        const auto& lambda = eig.eigenvalues();
        rep.min_eigenvalue = std::min(rep.min_eigenvalue, lambda.minCoeff());
        rep.scale = std::max(rep.scale, lambda.cwiseAbs().maxCoeff());
        const double det = std::abs(lambda.prod());
        rep.min_abs_det = std::min(rep.min_abs_det, det);
        rep.max_abs_det = std::max(rep.max_abs_det, det);
    }
    rep.positive = rep.scale > 0.0 && rep.min_eigenvalue >= -kPositivityTolerance * rep.scale;
    rep.degenerate = rep.scale == 0.0 || rep.max_abs_det <= kDegenerateDeterminant * std::pow(rep.scale, r);
    if (!rep.positive || rep.degenerate) return rep;

    const int m = s.order();
    if (m > 0) {
        // z^{rm} det S(z) is a polynomial of degree 2rm.
        const int top = 2 * r * m;
        const int Kd = std::max(next_power_of_two(2 * (top + 1)), next_power_of_two(2 * m + 2));
        const auto fine = sample_on_grid(s, Kd);
        auto dets = determinant_samples(fine);
        for (int j = 0; j < Kd; ++j) dets[static_cast<std::size_t>(j)] *= std::pow(SampledMatrixFunction::grid_point(j, Kd), r * m);
        auto coeffs = scalar_coefficients_from_samples(dets);
        coeffs.resize(static_cast<std::size_t>(top + 1));
        for (const auto& root : polynomial_roots(coeffs, kDeterminantTrim))
            if (std::abs(std::abs(root) - 1.0) <= kBoundaryRootTolerance) ++rep.boundary_roots;
    }
    rep.boundary = rep.boundary_roots > 0 || rep.min_eigenvalue <= kBoundaryEigenvalueFraction * rep.scale;
    return rep;
}

double check_factorization(const HermitianLaurentPolynomial& s, const MatrixPolynomial& x) {
    if (s.dim() != x.dim()) throw Error(ErrorCode::DimensionMismatch, "spectrum and factor have different dimensions");
    const auto product = multiply_by_adjoint(x);
    const int top = std::max(s.order(), product.order());
    double gap = 0.0;
    for (int n = 0; n <= top; ++n) gap = std::max(gap, (s.coeff(n) - product.coeff(n)).norm());
    return gap / (1.0 + s.scale());
}

DegreeCheck check_degree(const HermitianLaurentPolynomial& s, const MatrixPolynomial& x) {
    DegreeCheck out;
    out.spectrum_order = s.order();
    out.factor_degree = x.degree();
    out.passed = out.factor_degree <= out.spectrum_order;
    return out;
}

std::vector<Complex> determinant_coefficients(const MatrixPolynomial& x) {
    const int top = x.dim() * x.degree();
    const int K = next_power_of_two(2 * (top + 1));
    const auto samples = sample_on_grid(x, K);
    auto dets = determinant_samples(samples);
    double biggest_sample = 0.0;
    for (const auto& v : samples.samples()) biggest_sample = std::max(biggest_sample, v.norm());
    double biggest_det = 0.0;
    for (const auto& d : dets) biggest_det = std::max(biggest_det, std::abs(d));
    if (biggest_det <= kDegenerateDeterminant * std::pow(biggest_sample, x.dim()))
        throw Error(ErrorCode::IdenticallyZeroDeterminant, "det x(z) vanishes on the whole grid");
    auto coeffs = scalar_coefficients_from_samples(dets);
    coeffs.resize(static_cast<std::size_t>(top + 1));
    return coeffs;
}

OuterDeterminantReport check_outer_determinant(const MatrixPolynomial& x, double outer_tol) {
    const auto coeffs = determinant_coefficients(x);
    OuterDeterminantReport rep;
    rep.roots = polynomial_roots(coeffs, kDeterminantTrim);
    rep.min_root_modulus = std::numeric_limits<double>::infinity();
    for (const auto& root : rep.roots) {
        const double mod = std::abs(root);
        rep.min_root_modulus = std::min(rep.min_root_modulus, mod);
        if (std::abs(mod - 1.0) <= outer_tol) ++rep.boundary_roots;
    }
    rep.passed = rep.min_root_modulus >= 1.0 - outer_tol;
    return rep;
}

CausalIdentityReport check_causal_identity(const HermitianLaurentPolynomial& s, const MatrixPolynomial& x, int K) {
    if (s.dim() != x.dim()) throw Error(ErrorCode::DimensionMismatch, "spectrum and factor have different dimensions");
    const int m = s.order();
    const auto xs = sample_on_grid(x, K);
    const auto ss = sample_on_grid(s, K);
    require_invertible_on_grid(xs, "factor");

    std::vector<MatrixCoefficient> lhs;
    lhs.reserve(static_cast<std::size_t>(K));
    double gap = 0.0;
    double rhs_scale = 0.0;
    for (int j = 0; j < K; ++j) {
        const Complex zm = std::pow(SampledMatrixFunction::grid_point(j, K), m);
        MatrixCoefficient left = Eigen::PartialPivLU<MatrixCoefficient>(xs[j]).solve(zm * ss[j]);
        const MatrixCoefficient right = zm * xs[j].adjoint();
        gap = std::max(gap, (left - right).norm());
        rhs_scale = std::max(rhs_scale, right.norm());
        lhs.push_back(std::move(left));
    }
    CausalIdentityReport rep;
    rep.pointwise_gap = gap / (1.0 + rhs_scale);
    rep.anticausal_mass = anticausal_mass(SampledMatrixFunction(std::move(lhs)), m);
    return rep;
}

UnitaryEquivalenceReport check_constant_unitary_equivalence(const MatrixPolynomial& x1, const MatrixPolynomial& x2,
                                                            int K) {
    if (x1.dim() != x2.dim()) throw Error(ErrorCode::DimensionMismatch, "factors have different dimensions");
    const int r = x1.dim();
    const auto a = sample_on_grid(x1, K);
    const auto b = sample_on_grid(x2, K);
    require_invertible_on_grid(a, "first factor");

    std::vector<MatrixCoefficient> u;
    u.reserve(static_cast<std::size_t>(K));
    UnitaryEquivalenceReport rep;
    rep.mean = MatrixCoefficient::Zero(r, r);
    const MatrixCoefficient eye = MatrixCoefficient::Identity(r, r);
    for (int j = 0; j < K; ++j) {
        u.push_back(Eigen::PartialPivLU<MatrixCoefficient>(a[j]).solve(b[j]));
        rep.mean += u.back();
        rep.unitarity_gap = std::max(rep.unitarity_gap, (u.back() * u.back().adjoint() - eye).norm());
    }
    rep.mean /= static_cast<double>(K);
    for (const auto& uj : u) rep.constancy_gap = std::max(rep.constancy_gap, (uj - rep.mean).norm());
    return rep;
}

VerificationReport verify_all(const HermitianLaurentPolynomial& s, const MatrixPolynomial& x,
                              const VerifyOptions& opts) {
    if (s.dim() != x.dim()) throw Error(ErrorCode::DimensionMismatch, "spectrum and factor have different dimensions");
    const int m = std::max(s.order(), x.degree());
    const int K = opts.grid_size.value_or(verification_grid_size(m));
    if (!is_power_of_two(K) || K < 2 * m + 2)
        throw Error(ErrorCode::InvalidArgument, "verification grid must be a power of two >= 2m+2");

    VerificationReport report;
    auto add = [&report](std::string name, CheckStatus status, double measured, double tol, std::string detail) {
        report.checks.push_back({std::move(name), status, measured, tol, std::move(detail)});
    };

    const auto pos = check_positivity(s, K);
    const bool boundary = pos.boundary;
    {
        const double negativity = pos.scale > 0.0 ? std::max(0.0, -pos.min_eigenvalue) / pos.scale : 0.0;
        CheckStatus st = CheckStatus::pass;
        std::string detail = "min eigenvalue " + format_number(pos.min_eigenvalue) + ", min |det| " +
                             format_number(pos.min_abs_det);
        if (!pos.positive) {
            st = CheckStatus::fail;
            detail += ", S is not positive semidefinite on the grid";
        } else if (pos.degenerate) {
            st = CheckStatus::fail;
            detail += ", det S vanishes identically (log det S not integrable)";
        } else if (boundary) {
            st = CheckStatus::warn;
            detail += ", zeros on the unit circle (" + std::to_string(pos.boundary_roots) + " boundary det roots)";
        }
        add("positivity", st, negativity, opts.positivity_tol, std::move(detail));
    }

    auto graded = [boundary](double measured, double strict, double widened) {
        if (measured <= strict) return CheckStatus::pass;
        if (boundary && measured <= widened) return CheckStatus::warn;
        return CheckStatus::fail;
    };
    const double wide_residual = std::max(opts.residual_tol, opts.boundary_tol);
    const double wide_causal = std::max(opts.causal_tol, opts.boundary_tol);
    const double wide_outer = std::max(opts.outer_tol, opts.boundary_tol);

    {
        const double res = check_factorization(s, x);
        add("factorization", graded(res, opts.residual_tol, wide_residual), res,
            boundary ? wide_residual : opts.residual_tol, "max coefficient mismatch of S - x x^*, relative");
    }
    {
        const auto deg = check_degree(s, x);
        add("degree", deg.passed ? CheckStatus::pass : CheckStatus::fail, deg.factor_degree, deg.spectrum_order,
            "factor degree " + std::to_string(deg.factor_degree) + " vs spectrum order " +
                std::to_string(deg.spectrum_order));
    }
    try {
        const auto outer = check_outer_determinant(x, opts.outer_tol);
        const double depth =
            std::isfinite(outer.min_root_modulus) ? std::max(0.0, 1.0 - outer.min_root_modulus) : 0.0;
        CheckStatus st = graded(depth, opts.outer_tol, wide_outer);
        if (st == CheckStatus::pass && outer.boundary_roots > 0) st = CheckStatus::warn;
        std::string detail = outer.roots.empty() ? std::string("det x is constant, no roots")
                                                 : "min |root of det x| " + format_number(outer.min_root_modulus);
        if (outer.boundary_roots > 0) detail += ", " + std::to_string(outer.boundary_roots) + " roots on the circle";
        add("outer_determinant", st, depth, boundary ? wide_outer : opts.outer_tol, std::move(detail));
    } catch (const Error& e) {
        add("outer_determinant", CheckStatus::fail, kUnmeasured, opts.outer_tol, e.what());
    }
    try {
        const auto causal = check_causal_identity(s, x, K);
        const double tol = boundary ? wide_causal : opts.causal_tol;
        add("causal_gap", graded(causal.pointwise_gap, opts.causal_tol, wide_causal), causal.pointwise_gap, tol,
            "max |x^{-1} z^m S - z^m x^*| on the grid, relative");
        add("anticausal_mass", graded(causal.anticausal_mass, opts.causal_tol, wide_causal),
            causal.anticausal_mass, tol, "Fourier mass of x^{-1} z^m S outside [0, m], relative");
        const auto fine = check_causal_identity(s, x, 2 * K);
        const double drift = std::abs(fine.anticausal_mass - causal.anticausal_mass);
        const double wide_drift = std::max(opts.grid_doubling_tol, opts.boundary_tol);
        add("anticausal_grid_doubling", graded(drift, opts.grid_doubling_tol, wide_drift), drift,
            boundary ? wide_drift : opts.grid_doubling_tol,
            "change of anticausal mass from K=" + std::to_string(K) + " to " + std::to_string(2 * K));
    } catch (const Error& e) {
        const CheckStatus st = boundary ? CheckStatus::warn : CheckStatus::fail;
        for (const char* name : {"causal_gap", "anticausal_mass", "anticausal_grid_doubling"})
            add(name, st, kUnmeasured, opts.causal_tol, e.what());
    }
    return report;
}

}  // namespace fejer
