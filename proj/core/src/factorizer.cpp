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

#include "fejer/factorizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fejer/roots.hpp"
#include "fejer/verifier.hpp"
#include "linalg.hpp"

namespace fejer {

namespace {

constexpr double kSingularLeadingCondition = 1e12;
constexpr double kSingularIterateCondition = 1e12;
constexpr double kRootClusterTolerance = 1e-7;
constexpr int kMaxWilsonGrid = 1 << 15;

MatrixCoefficient lower_cholesky(const MatrixCoefficient& a, ErrorCode code, const std::string& what) {
    Eigen::LLT<MatrixCoefficient> llt(detail::hermitian_part(a));
    if (llt.info() != Eigen::Success) throw Error(code, what + " is not positive definite");
    return llt.matrixL();
}

// Step size relative to the coefficient scale, floored at 1.
double relative_tolerance(double tol, const MatrixPolynomial& x) { return tol * std::max(1.0, x.scale()); }

bool is_canonical_leading(const MatrixCoefficient& c) {
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
        if (c(i, i).imag() != 0.0 || !(c(i, i).real() > 0.0)) return false;
        for (Eigen::Index j = i + 1; j < c.cols(); ++j)
            if (c(i, j) != Complex{0.0, 0.0}) return false;
    }
    return true;
}

}  // namespace

std::string_view to_string(Algorithm a) noexcept {
    switch (a) {
        case Algorithm::bauer:
            return "bauer";
        case Algorithm::wilson:
            return "wilson";
        case Algorithm::scalar_roots:
            return "roots";
        case Algorithm::automatic:
            return "auto";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    if (name == "bauer") return Algorithm::bauer;
    if (name == "wilson") return Algorithm::wilson;
    if (name == "roots" || name == "scalar_roots") return Algorithm::scalar_roots;
    if (name == "auto") return Algorithm::automatic;
    return std::nullopt;
}

void FactorizationOptions::validate() const {
    if (!(residual_tol > 0.0) || !std::isfinite(residual_tol))
        throw Error(ErrorCode::InvalidArgument, "residual_tol must be positive");
    if (max_toeplitz_blocks < 1 || max_newton_iters < 1)
        throw Error(ErrorCode::InvalidArgument, "iteration and size caps must be >= 1");
    if (grid_size && !is_power_of_two(*grid_size))
        throw Error(ErrorCode::InvalidArgument, "grid size must be a power of two >= 2");
}

// ---------------------------------------------------------------------------

CanonicalForm canonical_normalize(const MatrixPolynomial& x) {
    const int r = x.dim();
    const MatrixCoefficient& lead = x.coeff(0);
    const double cond = detail::condition_number(lead);
    if (!(cond < kSingularLeadingCondition))
        throw Error(ErrorCode::SingularLeadingCoefficient,
                    "x(0) is numerically singular (condition " + detail::format_number(cond) + ")");
    if (is_canonical_leading(lead)) return {x, MatrixCoefficient::Identity(r, r)};

    const MatrixCoefficient l =
        lower_cholesky(lead * lead.adjoint(), ErrorCode::SingularLeadingCoefficient, "x(0) x(0)^*");
    MatrixCoefficient u = Eigen::PartialPivLU<MatrixCoefficient>(lead).solve(l);
    std::vector<MatrixCoefficient> coeffs;
    coeffs.reserve(x.coeffs().size());
    coeffs.push_back(l);
    for (int n = 1; n <= x.degree(); ++n) coeffs.emplace_back(x.coeff(n) * u);
    return {MatrixPolynomial(std::move(coeffs)), std::move(u)};
}

// ---------------------------------------------------------------------------

MatrixPolynomial bauer_factor(const HermitianLaurentPolynomial& s, const FactorizationOptions& opts,
                              IterationStats* stats) {
    opts.validate();
    const int m = s.order();
    const int r = s.dim();
    const auto width = static_cast<std::size_t>(m + 1);
    const auto& sigma = s.nonnegative_coeffs();
    const MatrixCoefficient zero = MatrixCoefficient::Zero(r, r);

    // ring[i % (m+1)][k] holds the block L(i, i-k), k = 0..m.
    std::vector<std::vector<MatrixCoefficient>> ring(width, std::vector<MatrixCoefficient>(width, zero));
    std::vector<MatrixCoefficient> row(width, zero);
    std::optional<MatrixPolynomial> previous;
    int checkpoint = 4 * (m + 1);
    const int cap = opts.max_toeplitz_blocks;

    for (int i = 0; i < cap; ++i) {
        std::fill(row.begin(), row.end(), zero);
        const int first = std::max(0, i - m);
        for (int j = first; j < i; ++j) {
            MatrixCoefficient acc = sigma[static_cast<std::size_t>(i - j)];
            const auto& rj = ring[static_cast<std::size_t>(j) % width];
            for (int l = first; l < j; ++l)
                acc.noalias() -= row[static_cast<std::size_t>(i - l)] * rj[static_cast<std::size_t>(j - l)].adjoint();
            // L(i, j) = acc L(j, j)^{-*}
            const MatrixCoefficient& diag = rj[0];
            row[static_cast<std::size_t>(i - j)] =
                diag.triangularView<Eigen::Lower>().solve(MatrixCoefficient(acc.adjoint())).adjoint();
        }
        MatrixCoefficient pivot = sigma[0];
        for (int l = first; l < i; ++l) {
            const auto& b = row[static_cast<std::size_t>(i - l)];
            pivot.noalias() -= b * b.adjoint();
        }
        Eigen::LLT<MatrixCoefficient> llt(detail::hermitian_part(pivot));
        if (llt.info() != Eigen::Success)
            throw Error(ErrorCode::CholeskyBreakdown,
                        "pivot block " + std::to_string(i) + " of the block Toeplitz matrix is not positive definite");
        row[0] = llt.matrixL();
        ring[static_cast<std::size_t>(i) % width] = row;

        const bool last = i + 1 == cap;
        if (i + 1 < checkpoint && !last) continue;
        MatrixPolynomial estimate(row);
        if (stats) stats->iterations = i + 1;
        if (previous) {
            const double step = coefficient_distance(estimate, *previous);
            if (stats) stats->last_step = step;
            if (step < relative_tolerance(opts.residual_tol, estimate)) return estimate;
        }
        if (last) {
            const double res = check_factorization(s, estimate);
            throw NoConvergenceError("Bauer iteration did not settle within " + std::to_string(cap) + " blocks",
                                     std::move(estimate), res, cap);
        }
        previous = std::move(estimate);
        checkpoint *= 2;
    }
    // cap >= 1 always reaches the `last` branch above.
    throw Error(ErrorCode::NoConvergence, "Bauer iteration did not run");
}

// ---------------------------------------------------------------------------

MatrixPolynomial wilson_factor(const HermitianLaurentPolynomial& s, const FactorizationOptions& opts,
                               IterationStats* stats) {
    opts.validate();
    const int m = s.order();
    const int r = s.dim();
    int K = opts.grid_size.value_or(std::max(256, default_grid_size(m)));
    if (K < 2 * m + 2) throw Error(ErrorCode::InvalidArgument, "Wilson grid must satisfy K >= 2m+2");

    std::vector<MatrixCoefficient> psi(static_cast<std::size_t>(m + 1), MatrixCoefficient::Zero(r, r));
    psi[0] = lower_cholesky(s.coeff(0), ErrorCode::NotPositiveDefinite, "sigma_0");

    std::optional<MatrixPolynomial> best;
    double best_residual = std::numeric_limits<double>::infinity();
    auto remember = [&](const MatrixPolynomial& x, double res) {
        if (res < best_residual) {
            best_residual = res;
            best = x;
        }
    };

    auto samples = sample_on_grid(s, K);
    const MatrixCoefficient eye = MatrixCoefficient::Identity(r, r);
    for (int iter = 0; iter < opts.max_newton_iters; ++iter) {
        const MatrixPolynomial current(psi);
        const auto values = sample_on_grid(current, K);
        std::vector<MatrixCoefficient> g;
        g.reserve(static_cast<std::size_t>(K));
        for (int j = 0; j < K; ++j) {
            const double cond = detail::condition_number(values[j]);
            if (!(cond < kSingularIterateCondition))
                throw Error(ErrorCode::SingularIterate, "Wilson iterate " + std::to_string(iter) +
                                                            " is singular at grid point " + std::to_string(j));
            Eigen::PartialPivLU<MatrixCoefficient> lu(values[j]);
            const MatrixCoefficient left = lu.solve(samples[j]);
            const MatrixCoefficient both = lu.solve(MatrixCoefficient(left.adjoint())).adjoint();
            g.push_back(detail::hermitian_part(both) + eye);
        }
        auto plus = coefficients_from_samples(SampledMatrixFunction(std::move(g)), 0, m);
        plus[0] *= 0.5;

        std::vector<MatrixCoefficient> next(static_cast<std::size_t>(m + 1), MatrixCoefficient::Zero(r, r));
        for (int n = 0; n <= m; ++n)
            for (int a = 0; a <= n; ++a)
                next[static_cast<std::size_t>(n)].noalias() +=
                    psi[static_cast<std::size_t>(a)] * plus[static_cast<std::size_t>(n - a)];
        for (const auto& c : next)
            if (!c.allFinite()) throw Error(ErrorCode::SingularIterate, "Wilson iterate diverged");

        const MatrixPolynomial candidate(next);
        const double step = coefficient_distance(candidate, current);
        const double res = check_factorization(s, candidate);
        remember(candidate, res);
        psi = std::move(next);
        if (stats) {
            stats->iterations = iter + 1;
            stats->grid_size = K;
            stats->last_step = step;
        }
        if (step >= relative_tolerance(opts.residual_tol, candidate)) continue;
        if (res <= opts.residual_tol) return candidate;
        // Settled but the residual is limited by aliasing on the grid.
        if (opts.grid_size || K >= kMaxWilsonGrid) break;
        K *= 2;
        samples = sample_on_grid(s, K);
    }
    throw NoConvergenceError("Wilson iteration did not reach the residual tolerance", *best, best_residual,
                             stats ? stats->iterations : opts.max_newton_iters);
}

// ---------------------------------------------------------------------------

MatrixPolynomial scalar_root_factor(const HermitianLaurentPolynomial& s, const FactorizationOptions& opts,
                                    int* boundary_roots) {
    opts.validate();
    if (s.dim() != 1) throw Error(ErrorCode::InvalidArgument, "root-based factorization needs r = 1");
    const int m = s.order();
    if (boundary_roots) *boundary_roots = 0;
    if (m == 0) {
        const double c = s.coeff(0)(0, 0).real();
        if (!(c > 0.0)) throw Error(ErrorCode::NotPositiveDefinite, "constant spectrum must be positive");
        return MatrixPolynomial::constant(MatrixCoefficient::Constant(1, 1, std::sqrt(c)));
    }

    // z^m S(z) has ascending coefficients sigma_{-m}, ..., sigma_m.
    std::vector<Complex> poly;
    poly.reserve(static_cast<std::size_t>(2 * m + 1));
    for (int n = -m; n <= m; ++n) poly.push_back(s.coeff(n)(0, 0));
    const auto roots = polynomial_roots(poly);

    std::vector<Complex> on_circle;
    std::vector<Complex> off_circle;
    for (const auto& root : roots) {
        if (std::abs(std::abs(root) - 1.0) <= kBoundaryRootTolerance)
            on_circle.push_back(root);
        else
            off_circle.push_back(root);
    }
    if (on_circle.size() % 2 != 0)
        throw Error(ErrorCode::OddBoundaryMultiplicity,
                    std::to_string(on_circle.size()) + " roots on the unit circle cannot pair up");

    std::vector<Complex> selected;
    selected.reserve(static_cast<std::size_t>(m));
    // Pair each boundary root with its nearest unpaired neighbour; keep the
    // pair's mean projected onto the circle.
    std::vector<bool> used(on_circle.size(), false);
    for (std::size_t i = 0; i < on_circle.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        std::size_t partner = on_circle.size();
        double closest = std::numeric_limits<double>::infinity();
        for (std::size_t j = i + 1; j < on_circle.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(on_circle[i] - on_circle[j]);
            if (d < closest) {
                closest = d;
                partner = j;
            }
        }
        if (partner == on_circle.size() || closest > kRootClusterTolerance * std::abs(on_circle[i]))
            throw Error(ErrorCode::OddBoundaryMultiplicity, "boundary root has no partner within tolerance");
        used[partner] = true;
        const Complex mid = 0.5 * (on_circle[i] + on_circle[partner]);
        selected.push_back(mid / std::abs(mid));
    }
    std::sort(off_circle.begin(), off_circle.end(),
              [](const Complex& a, const Complex& b) { return std::abs(a) > std::abs(b); });
    for (std::size_t i = 0; i < off_circle.size() / 2; ++i) selected.push_back(off_circle[i]);
    if (boundary_roots) *boundary_roots = static_cast<int>(on_circle.size() / 2);

    // chi(z) = rho_0 prod (1 - z / alpha), rho_0 > 0, fixed by sigma_m = rho_0^2 q_m.
    const auto q = polynomial_from_reciprocal_roots(selected);
    const double rho0 = std::sqrt(std::abs(poly.back()) / std::abs(q.back()));
    std::vector<MatrixCoefficient> coeffs;
    coeffs.reserve(q.size());
    for (const auto& qn : q) coeffs.emplace_back(MatrixCoefficient::Constant(1, 1, rho0 * qn));
    coeffs[0](0, 0) = Complex{rho0, 0.0};
    return canonical_normalize(MatrixPolynomial(std::move(coeffs))).factor;
}

// ---------------------------------------------------------------------------

FactorizationResult factor(const HermitianLaurentPolynomial& s, const FactorizationOptions& opts) {
    opts.validate();
    const int m = s.order();
    const auto pos = check_positivity(s, verification_grid_size(m));
    if (!pos.positive)
        throw Error(ErrorCode::NotPositiveDefinite,
                    "S has minimum grid eigenvalue " + detail::format_number(pos.min_eigenvalue));
    if (pos.degenerate)
        throw Error(ErrorCode::DegenerateDeterminant, "det S vanishes identically on the grid");

    FactorizationResult result{MatrixPolynomial::identity(s.dim()), opts.algorithm, 0, 0.0, {}};
    double accept_tol = opts.residual_tol;
    if (pos.boundary) {
        accept_tol = std::max(opts.residual_tol, kBoundaryResidualTolerance);
        result.warnings.push_back("spectrum has zeros on the unit circle; tolerance widened to " +
                                  detail::format_number(accept_tol));
    }

    auto canonical_best = [](const NoConvergenceError& e, Algorithm a) {
        std::string msg = std::string(to_string(a)) + ": " + e.message();
        try {
            return NoConvergenceError(msg, canonical_normalize(e.best()).factor, e.residual(), e.iterations());
        } catch (const Error&) {
            return NoConvergenceError(msg, e.best(), e.residual(), e.iterations());
        }
    };

    IterationStats stats;
    // Iterative algorithms run at the strict tolerance. On boundary spectra
    // a capped run whose best iterate meets the widened tolerance is kept.
    auto run_iterative = [&](Algorithm a) -> MatrixPolynomial {
        stats = {};
        try {
            return a == Algorithm::bauer ? bauer_factor(s, opts, &stats) : wilson_factor(s, opts, &stats);
        } catch (const NoConvergenceError& e) {
            if (pos.boundary && e.residual() <= accept_tol) {
                result.warnings.push_back(std::string(to_string(a)) +
                                          " stopped at its iteration cap; best iterate meets the widened tolerance");
                stats.iterations = e.iterations();
                return e.best();
            }
            throw canonical_best(e, a);
        }
    };

    std::optional<MatrixPolynomial> raw;
    switch (opts.algorithm) {
        case Algorithm::bauer:
        case Algorithm::wilson:
            raw = run_iterative(opts.algorithm);
            result.algorithm_used = opts.algorithm;
            break;
        case Algorithm::scalar_roots: {
            int on_circle = 0;
            raw = scalar_root_factor(s, opts, &on_circle);
            if (on_circle > 0)
                result.warnings.push_back(std::to_string(on_circle) + " factor roots lie on the unit circle");
            stats.iterations = 1;
            result.algorithm_used = Algorithm::scalar_roots;
            break;
        }
        case Algorithm::automatic: {
            std::optional<NoConvergenceError> wilson_failure;
            try {
                auto w = run_iterative(Algorithm::wilson);
                if (check_outer_determinant(w, accept_tol > opts.residual_tol ? kBoundaryResidualTolerance : 1e-6)
                        .passed) {
                    raw = std::move(w);
                    result.algorithm_used = Algorithm::wilson;
                } else {
                    result.warnings.push_back("wilson converged to a non-outer factor; falling back to bauer");
                }
            } catch (const NoConvergenceError& e) {
                wilson_failure = e;
                result.warnings.push_back(std::string(e.what()) + "; falling back to bauer");
            } catch (const Error& e) {
                if (e.code() != ErrorCode::SingularIterate && e.code() != ErrorCode::NotPositiveDefinite &&
                    e.code() != ErrorCode::IdenticallyZeroDeterminant)
                    throw;
                result.warnings.push_back(std::string("wilson: ") + e.what() + "; falling back to bauer");
            }
            if (!raw) {
                try {
                    raw = run_iterative(Algorithm::bauer);
                } catch (const NoConvergenceError& e) {
                    if (wilson_failure && wilson_failure->residual() < e.residual()) throw *wilson_failure;
                    throw;
                }
                result.algorithm_used = Algorithm::bauer;
            }
            break;
        }
    }

    result.factor = canonical_normalize(*raw).factor;
    result.iterations_or_blocks = stats.iterations;
    result.achieved_residual = check_factorization(s, result.factor);
    if (result.achieved_residual > accept_tol)
        result.warnings.push_back("residual " + detail::format_number(result.achieved_residual) + " exceeds tolerance");
    if (result.factor.degree() > m) result.warnings.push_back("factor degree exceeds spectrum order");
    try {
        const auto outer = check_outer_determinant(result.factor);
        if (!outer.passed)
            result.warnings.push_back("det of the factor has a root inside the unit disk (modulus " +
                                      detail::format_number(outer.min_root_modulus) + ")");
        else if (outer.boundary_roots > 0)
            result.warnings.push_back("det of the factor has roots on the unit circle");
    } catch (const Error& e) {
        result.warnings.push_back(e.what());
    }
    return result;
}

}  // namespace fejer
