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

#ifndef FEJER_LAURENT_HPP
#define FEJER_LAURENT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace fejer {

using Complex = std::complex<double>;

// One r x r coefficient of a matrix polynomial, or one sample of a matrix
// function on the unit circle.
using MatrixCoefficient = Eigen::MatrixXcd;

// Trailing coefficients with Frobenius norm at most this fraction of the
// largest coefficient norm are treated as zero when fixing the degree.
inline constexpr double kTrimThreshold = 1e-10;

// Absolute per-entry tolerance on the Hermitian symmetry of sigma_0, scaled
// by max(1, largest |entry|).
inline constexpr double kHermitianTolerance = 1e-12;

// Causal matrix polynomial rho_0 + rho_1 z + ... + rho_m z^m. Trailing
// coefficients below the trim threshold are dropped on construction, so
// degree() is always tight.
class MatrixPolynomial {
   public:
    explicit MatrixPolynomial(std::vector<MatrixCoefficient> coeffs);

    static MatrixPolynomial identity(int r);
    static MatrixPolynomial constant(const MatrixCoefficient& c);

    int dim() const noexcept { return dim_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const MatrixCoefficient& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<MatrixCoefficient>& coeffs() const noexcept { return coeffs_; }

    // Largest coefficient Frobenius norm.
    double scale() const noexcept;

    // Horner evaluation; any finite z.
    MatrixCoefficient evaluate(Complex z) const;

    // x(z) * U for a constant matrix U.
    MatrixPolynomial right_multiplied(const MatrixCoefficient& u) const;

   private:
    int dim_;
    std::vector<MatrixCoefficient> coeffs_;
};

// Para-Hermitian Laurent polynomial S(z) = sum_{n=-m}^{m} sigma_n z^n. Only
// sigma_0..sigma_m are stored; sigma_{-n} is always sigma_n^*.
class HermitianLaurentPolynomial {
   public:
    // Throws InvalidArgument when sigma_0 is not Hermitian; the stored sigma_0
    // is the exact Hermitian part of the input.
    explicit HermitianLaurentPolynomial(std::vector<MatrixCoefficient> coeffs);

    static HermitianLaurentPolynomial identity(int r);

    int dim() const noexcept { return dim_; }
    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

    // sigma_n for -order() <= n <= order(), zero outside the band.
    MatrixCoefficient coeff(int n) const;
    const std::vector<MatrixCoefficient>& nonnegative_coeffs() const noexcept { return coeffs_; }

    double scale() const noexcept;

    // Requires |z| = 1 (within 1e-9). The result is exactly Hermitian.
    MatrixCoefficient evaluate(Complex z) const;

   private:
    int dim_;
    std::vector<MatrixCoefficient> coeffs_;
};

// Values of a matrix function at z_j = exp(2 pi i j / K), j = 0..K-1.
class SampledMatrixFunction {
   public:
    explicit SampledMatrixFunction(std::vector<MatrixCoefficient> samples);

    int dim() const noexcept { return dim_; }
    int size() const noexcept { return static_cast<int>(samples_.size()); }
    const MatrixCoefficient& operator[](int j) const { return samples_[static_cast<std::size_t>(j)]; }
    const std::vector<MatrixCoefficient>& samples() const noexcept { return samples_; }

    static Complex grid_point(int j, int K);

   private:
    int dim_;
    std::vector<MatrixCoefficient> samples_;
};

bool is_power_of_two(int k) noexcept;

// Smallest power of two >= 8(m+1).
int default_grid_size(int m) noexcept;

// Smallest power of two >= n (and >= 2).
int next_power_of_two(int n) noexcept;

MatrixCoefficient evaluate_at(const MatrixPolynomial& p, Complex z);
MatrixCoefficient evaluate_at(const HermitianLaurentPolynomial& s, Complex z);

// Requires K a power of two and K >= 2m + 2.
SampledMatrixFunction sample_on_grid(const MatrixPolynomial& p, int K);
SampledMatrixFunction sample_on_grid(const HermitianLaurentPolynomial& s, int K);

// Fourier coefficients c_lo..c_hi of the trigonometric interpolant of f.
// Requires hi - lo < K.
std::vector<MatrixCoefficient> coefficients_from_samples(const SampledMatrixFunction& f, int lo, int hi);

// Scalar helpers used for determinant polynomials. samples_from_coefficients
// evaluates sum_n c[n] z_j^n on a K-point grid (c.size() <= K).
std::vector<Complex> scalar_samples_from_coefficients(std::span<const Complex> coeffs, int K);
std::vector<Complex> scalar_coefficients_from_samples(std::span<const Complex> samples);

// max_n ||a_n - b_n||_F, missing coefficients read as zero.
double coefficient_distance(const MatrixPolynomial& a, const MatrixPolynomial& b);

// S = x x^* on the unit circle.
HermitianLaurentPolynomial multiply_by_adjoint(const MatrixPolynomial& x);

}  // namespace fejer

#endif  // FEJER_LAURENT_HPP
