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

#ifndef FEJER_VERIFIER_HPP
#define FEJER_VERIFIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "fejer/laurent.hpp"

namespace fejer {

enum class CheckStatus { pass, warn, fail };

std::string_view to_string(CheckStatus status) noexcept;

struct CheckEntry {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    double measured = 0.0;
    double tolerance = 0.0;
    std::string detail;

    bool passed() const noexcept { return status != CheckStatus::fail; }
    bool warning() const noexcept { return status == CheckStatus::warn; }
};

struct VerificationReport {
    std::vector<CheckEntry> checks;

    // Conjunction over all checks; warnings do not fail the report.
    bool overall() const noexcept;
    bool has_warnings() const noexcept;
    const CheckEntry* find(std::string_view name) const noexcept;
};

struct VerifyOptions {
    double positivity_tol = 1e-10;
    double residual_tol = 1e-9;
    double outer_tol = 1e-6;
    double causal_tol = 1e-8;
    double grid_doubling_tol = 1e-9;
    // Replaces the residual and causal-identity tolerances when S has zeros on the circle.
    double boundary_tol = 1e-4;
    std::optional<int> grid_size;
};

// Roots of det S within this distance of the unit circle mark a boundary
// (warning-grade) spectrum. A double root on the circle splits by roughly
// sqrt(machine epsilon) under rounding, so this is looser than outer_tol.
inline constexpr double kBoundaryRootTolerance = 1e-5;

// Smallest eigenvalue below this fraction of the spectrum scale also marks a
// boundary spectrum.
inline constexpr double kBoundaryEigenvalueFraction = 1e-8;

struct PositivityReport {
    double min_eigenvalue = 0.0;
    double min_abs_det = 0.0;
    double max_abs_det = 0.0;
    // Largest eigenvalue over the grid; tolerances are relative to it.
    double scale = 0.0;
    // Roots of det(z^m S(z)) within kBoundaryRootTolerance of |z| = 1.
    int boundary_roots = 0;
    bool positive = false;
    bool degenerate = false;
    bool boundary = false;
};

// Eigenvalue scan of S on a K-point grid plus a root scan of det S.
PositivityReport check_positivity(const HermitianLaurentPolynomial& s, int K);

// max_n ||sigma_n(S) - sigma_n(x x^*)||_F / (1 + max_n ||sigma_n(S)||_F)
double check_factorization(const HermitianLaurentPolynomial& s, const MatrixPolynomial& x);

struct DegreeCheck {
    int spectrum_order = 0;
    int factor_degree = 0;
    bool passed = false;
};

DegreeCheck check_degree(const HermitianLaurentPolynomial& s, const MatrixPolynomial& x);

struct OuterDeterminantReport {
    // +infinity when det x is a nonzero constant.
    double min_root_modulus = 0.0;
    std::vector<Complex> roots;
    int boundary_roots = 0;
    bool passed = false;
};

// Ascending coefficients of det x(z), recovered from grid samples.
std::vector<Complex> determinant_coefficients(const MatrixPolynomial& x);

OuterDeterminantReport check_outer_determinant(const MatrixPolynomial& x, double outer_tol = 1e-6);

struct CausalIdentityReport {
    double pointwise_gap = 0.0;
    double anticausal_mass = 0.0;
};

// Compares x(z)^{-1} z^m S(z) with z^m x(z)^* on the grid, and measures the
// Fourier mass of the left side outside the indices [0, m].
CausalIdentityReport check_causal_identity(const HermitianLaurentPolynomial& s, const MatrixPolynomial& x, int K);

struct UnitaryEquivalenceReport {
    double constancy_gap = 0.0;
    double unitarity_gap = 0.0;
    MatrixCoefficient mean;
};

// U_j = x1(z_j)^{-1} x2(z_j): how far it is from one constant unitary matrix.
UnitaryEquivalenceReport check_constant_unitary_equivalence(const MatrixPolynomial& x1, const MatrixPolynomial& x2,
                                                            int K);

// max(256, default_grid_size(m))
int verification_grid_size(int m) noexcept;

// Runs every check and records failures as entries; never throws for
// numerical failures. Throws DimensionMismatch when r differs.
VerificationReport verify_all(const HermitianLaurentPolynomial& s, const MatrixPolynomial& x,
                              const VerifyOptions& opts = {});

}  // namespace fejer

#endif  // FEJER_VERIFIER_HPP
