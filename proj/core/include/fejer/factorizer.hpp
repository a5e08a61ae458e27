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

#ifndef FEJER_FACTORIZER_HPP
#define FEJER_FACTORIZER_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fejer/errors.hpp"
#include "fejer/laurent.hpp"

namespace fejer {

enum class Algorithm { bauer, wilson, scalar_roots, automatic };

std::string_view to_string(Algorithm a) noexcept;
// Accepts "bauer", "wilson", "roots"/"scalar_roots" and "auto".
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

struct FactorizationOptions {
    Algorithm algorithm = Algorithm::automatic;
    double residual_tol = 1e-9;
    int max_toeplitz_blocks = 1 << 14;
    int max_newton_iters = 60;
    // Wilson grid; default max(256, default_grid_size(m)), doubled on stagnation.
    std::optional<int> grid_size;

    void validate() const;
};

struct FactorizationResult {
    MatrixPolynomial factor;
    Algorithm algorithm_used = Algorithm::automatic;
    int iterations_or_blocks = 0;
    double achieved_residual = 0.0;
    std::vector<std::string> warnings;
};

// Raised when an iteration cap is hit. Carries the best iterate seen.
class NoConvergenceError : public Error {
   public:
    NoConvergenceError(const std::string& message, MatrixPolynomial best, double residual, int iterations)
        : Error(ErrorCode::NoConvergence, message),
          best_(std::move(best)),
          residual_(residual),
          iterations_(iterations) {}

    const MatrixPolynomial& best() const noexcept { return best_; }
    double residual() const noexcept { return residual_; }
    int iterations() const noexcept { return iterations_; }

   private:
    MatrixPolynomial best_;
    double residual_;
    int iterations_;
};

struct IterationStats {
    int iterations = 0;  // Newton steps, or block rows for Bauer
    int grid_size = 0;   // Wilson only
    double last_step = 0.0;
};

// Spectral factor S = x x^*, det x outer, canonicalized. Checks positivity
// first; spectra with zeros on the circle are accepted with a warning and a
// residual tolerance widened to kBoundaryResidualTolerance.
FactorizationResult factor(const HermitianLaurentPolynomial& s, const FactorizationOptions& opts = {});

inline constexpr double kBoundaryResidualTolerance = 1e-4;

// Banded block-Toeplitz Cholesky. Returns the raw last block row estimate.
MatrixPolynomial bauer_factor(const HermitianLaurentPolynomial& s, const FactorizationOptions& opts = {},
                              IterationStats* stats = nullptr);

// Newton iteration x <- x [x^{-1} S x^{-*} + I]_+ on a unit-circle grid,
// truncated to degree m. Returns the raw (non-canonical) iterate.
MatrixPolynomial wilson_factor(const HermitianLaurentPolynomial& s, const FactorizationOptions& opts = {},
                               IterationStats* stats = nullptr);

// r = 1 only: roots of z^m S(z), outer half selected. Canonicalized output.
// `boundary_roots` receives the number of selected roots on the circle.
MatrixPolynomial scalar_root_factor(const HermitianLaurentPolynomial& s, const FactorizationOptions& opts = {},
                                    int* boundary_roots = nullptr);

struct CanonicalForm {
    MatrixPolynomial factor;
    MatrixCoefficient unitary;
};

// (x U, U) with (x U)(0) lower triangular with positive real diagonal.
CanonicalForm canonical_normalize(const MatrixPolynomial& x);

}  // namespace fejer

#endif  // FEJER_FACTORIZER_HPP
