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

#include "fejer/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <unsupported/Eigen/FFT>

#include "fejer/errors.hpp"
#include "linalg.hpp"

namespace fejer {

namespace {

void require_finite(const MatrixCoefficient& c, const char* what) {
    if (!c.allFinite()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " has non-finite entries");
}

int common_dimension(const std::vector<MatrixCoefficient>& coeffs, const char* what) {
    if (coeffs.empty()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs at least one coefficient");
    const auto r = coeffs.front().rows();
    if (r < 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + " dimension must be >= 1");
    for (const auto& c : coeffs) {
        if (c.rows() != r || c.cols() != r)
            throw Error(ErrorCode::DimensionMismatch, std::string(what) + " coefficients must all be r x r");
        require_finite(c, what);
    }
    return static_cast<int>(r);
}

void trim_trailing(std::vector<MatrixCoefficient>& coeffs) {
    double max_norm = 0.0;
    for (const auto& c : coeffs) max_norm = std::max(max_norm, c.norm());
    while (coeffs.size() > 1 && coeffs.back().norm() <= kTrimThreshold * max_norm) coeffs.pop_back();
}

double max_norm(const std::vector<MatrixCoefficient>& coeffs) {
    double s = 0.0;
    for (const auto& c : coeffs) s = std::max(s, c.norm());
    return s;
}

void require_finite(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw Error(ErrorCode::InvalidArgument, "evaluation point must be finite");
}

void require_grid(int K, int m) {
    if (!is_power_of_two(K)) throw Error(ErrorCode::InvalidArgument, "grid size must be a power of two >= 2");
    if (K < 2 * m + 2)
        throw Error(ErrorCode::InvalidArgument, "grid size " + std::to_string(K) + " aliases a band of order " +
                                                    std::to_string(m) + " (need K >= 2m+2)");
}

// Entrywise unscaled transform of a list of r x r matrices.
// inverse == true computes sum_n c_n w^{+jn}, false computes sum_j f_j w^{-jn}.
std::vector<MatrixCoefficient> entrywise_transform(const std::vector<MatrixCoefficient>& in, int r, bool inverse) {
    const auto K = in.size();
    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    std::vector<Complex> src(K), dst(K);
    std::vector<MatrixCoefficient> out(K, MatrixCoefficient::Zero(r, r));
    for (int a = 0; a < r; ++a) {
        for (int b = 0; b < r; ++b) {
            for (std::size_t j = 0; j < K; ++j) src[j] = in[j](a, b);
            if (inverse)
                fft.inv(dst, src);
            else
                fft.fwd(dst, src);
            for (std::size_t j = 0; j < K; ++j) out[j](a, b) = dst[j];
        }
    }
    return out;
}

std::size_t wrap(int n, int K) { return static_cast<std::size_t>(((n % K) + K) % K); }

}  // namespace

// ---------------------------------------------------------------------------
// MatrixPolynomial

MatrixPolynomial::MatrixPolynomial(std::vector<MatrixCoefficient> coeffs)
    : dim_(common_dimension(coeffs, "matrix polynomial")), coeffs_(std::move(coeffs)) {
    trim_trailing(coeffs_);
}

MatrixPolynomial MatrixPolynomial::identity(int r) { return constant(MatrixCoefficient::Identity(r, r)); }

MatrixPolynomial MatrixPolynomial::constant(const MatrixCoefficient& c) { return MatrixPolynomial({c}); }

double MatrixPolynomial::scale() const noexcept { return max_norm(coeffs_); }

MatrixCoefficient MatrixPolynomial::evaluate(Complex z) const {
    require_finite(z);
    MatrixCoefficient acc = coeffs_.back();
    for (int n = degree() - 1; n >= 0; --n) acc = coeffs_[static_cast<std::size_t>(n)] + z * acc;
    return acc;
}

MatrixPolynomial MatrixPolynomial::right_multiplied(const MatrixCoefficient& u) const {
    if (u.rows() != dim_ || u.cols() != dim_) throw Error(ErrorCode::DimensionMismatch, "right factor must be r x r");
    std::vector<MatrixCoefficient> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.emplace_back(c * u);
    return MatrixPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------
// HermitianLaurentPolynomial

HermitianLaurentPolynomial::HermitianLaurentPolynomial(std::vector<MatrixCoefficient> coeffs)
    : dim_(common_dimension(coeffs, "Laurent polynomial")), coeffs_(std::move(coeffs)) {
    auto& s0 = coeffs_.front();
    const double tol = kHermitianTolerance * std::max(1.0, s0.cwiseAbs().maxCoeff());
    const double asym = (s0 - s0.adjoint()).cwiseAbs().maxCoeff();
    if (asym > tol)
        throw Error(ErrorCode::InvalidArgument,
                    "sigma_0 must be Hermitian (max |sigma_0 - sigma_0^*| = " + detail::format_number(asym) + ")");
    MatrixCoefficient herm = 0.5 * (s0 + s0.adjoint());
    s0 = herm;
    trim_trailing(coeffs_);
}

HermitianLaurentPolynomial HermitianLaurentPolynomial::identity(int r) {
    return HermitianLaurentPolynomial({MatrixCoefficient::Identity(r, r)});
}

MatrixCoefficient HermitianLaurentPolynomial::coeff(int n) const {
    const int m = order();
    if (n > m || n < -m) return MatrixCoefficient::Zero(dim_, dim_);
    if (n >= 0) return coeffs_[static_cast<std::size_t>(n)];
    return coeffs_[static_cast<std::size_t>(-n)].adjoint();
}

double HermitianLaurentPolynomial::scale() const noexcept { return max_norm(coeffs_); }

MatrixCoefficient HermitianLaurentPolynomial::evaluate(Complex z) const {
    require_finite(z);
    if (std::abs(std::abs(z) - 1.0) > 1e-9)
        throw Error(ErrorCode::InvalidArgument, "Laurent polynomials are evaluated on |z| = 1 only");
    const int m = order();
    if (m == 0) return coeffs_.front();
    // sigma_0 + A(z) + A(z)^* with A(z) = sum_{n >= 1} sigma_n z^n
    MatrixCoefficient acc = coeffs_.back();
    for (int n = m - 1; n >= 1; --n) acc = coeffs_[static_cast<std::size_t>(n)] + z * acc;
    acc *= z;
    MatrixCoefficient out = coeffs_.front() + acc + MatrixCoefficient(acc.adjoint());
    return out;
}

// ---------------------------------------------------------------------------
// SampledMatrixFunction

SampledMatrixFunction::SampledMatrixFunction(std::vector<MatrixCoefficient> samples)
    : dim_(common_dimension(samples, "sampled matrix function")), samples_(std::move(samples)) {
    if (!is_power_of_two(size()))
        throw Error(ErrorCode::InvalidArgument, "grid size must be a power of two >= 2");
}

Complex SampledMatrixFunction::grid_point(int j, int K) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(K));
}

// ---------------------------------------------------------------------------

bool is_power_of_two(int k) noexcept { return k >= 2 && (k & (k - 1)) == 0; }

int next_power_of_two(int n) noexcept {
    int k = 2;
    while (k < n) k <<= 1;
    return k;
}

int default_grid_size(int m) noexcept { return next_power_of_two(8 * (m + 1)); }

MatrixCoefficient evaluate_at(const MatrixPolynomial& p, Complex z) { return p.evaluate(z); }

MatrixCoefficient evaluate_at(const HermitianLaurentPolynomial& s, Complex z) { return s.evaluate(z); }

SampledMatrixFunction sample_on_grid(const MatrixPolynomial& p, int K) {
    require_grid(K, p.degree());
    const int r = p.dim();
    std::vector<MatrixCoefficient> padded(static_cast<std::size_t>(K), MatrixCoefficient::Zero(r, r));
    for (int n = 0; n <= p.degree(); ++n) padded[static_cast<std::size_t>(n)] = p.coeff(n);
    return SampledMatrixFunction(entrywise_transform(padded, r, true));
}

SampledMatrixFunction sample_on_grid(const HermitianLaurentPolynomial& s, int K) {
    const int m = s.order();
    require_grid(K, m);
    const int r = s.dim();
    std::vector<MatrixCoefficient> padded(static_cast<std::size_t>(K), MatrixCoefficient::Zero(r, r));
    for (int n = -m; n <= m; ++n) padded[wrap(n, K)] = s.coeff(n);
    auto samples = entrywise_transform(padded, r, true);
    for (auto& v : samples) {
        MatrixCoefficient herm = 0.5 * (v + v.adjoint());
        v = herm;
    }
    return SampledMatrixFunction(std::move(samples));
}

std::vector<MatrixCoefficient> coefficients_from_samples(const SampledMatrixFunction& f, int lo, int hi) {
    const int K = f.size();
    if (hi < lo) throw Error(ErrorCode::InvalidArgument, "coefficient window must satisfy lo <= hi");
    if (hi - lo >= K)
        throw Error(ErrorCode::InvalidArgument, "coefficient window [" + std::to_string(lo) + ", " +
                                                    std::to_string(hi) + "] is wider than the grid");
    const auto spectrum = entrywise_transform(f.samples(), f.dim(), false);
    const double inv_k = 1.0 / static_cast<double>(K);
    std::vector<MatrixCoefficient> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (int n = lo; n <= hi; ++n) out.emplace_back(spectrum[wrap(n, K)] * inv_k);
    return out;
}

std::vector<Complex> scalar_samples_from_coefficients(std::span<const Complex> coeffs, int K) {
    if (!is_power_of_two(K) || coeffs.size() > static_cast<std::size_t>(K))
        throw Error(ErrorCode::InvalidArgument, "scalar grid must be a power of two covering all coefficients");
    std::vector<Complex> padded(static_cast<std::size_t>(K), Complex{0.0, 0.0});
    std::copy(coeffs.begin(), coeffs.end(), padded.begin());
    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    std::vector<Complex> out;
    fft.inv(out, padded);
    return out;
}

std::vector<Complex> scalar_coefficients_from_samples(std::span<const Complex> samples) {
    const int K = static_cast<int>(samples.size());
    if (!is_power_of_two(K)) throw Error(ErrorCode::InvalidArgument, "grid size must be a power of two >= 2");
    std::vector<Complex> in(samples.begin(), samples.end());
    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    std::vector<Complex> out;
    fft.fwd(out, in);
    for (auto& c : out) c /= static_cast<double>(K);
    return out;
}

double coefficient_distance(const MatrixPolynomial& a, const MatrixPolynomial& b) {
    if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "polynomials have different dimensions");
    const int top = std::max(a.degree(), b.degree());
    double gap = 0.0;
    for (int n = 0; n <= top; ++n) {
        if (n > a.degree())
            gap = std::max(gap, b.coeff(n).norm());
        else if (n > b.degree())
            gap = std::max(gap, a.coeff(n).norm());
        else
            gap = std::max(gap, (a.coeff(n) - b.coeff(n)).norm());
    }
    return gap;
}

HermitianLaurentPolynomial multiply_by_adjoint(const MatrixPolynomial& x) {
    const int m = x.degree();
    const int r = x.dim();
    std::vector<MatrixCoefficient> sigma(static_cast<std::size_t>(m + 1), MatrixCoefficient::Zero(r, r));
    for (int n = 0; n <= m; ++n) {
        auto& s = sigma[static_cast<std::size_t>(n)];
        for (int k = 0; k + n <= m; ++k) s.noalias() += x.coeff(k + n) * x.coeff(k).adjoint();
    }
    MatrixCoefficient herm = 0.5 * (sigma[0] + sigma[0].adjoint());
    sigma[0] = herm;
    return HermitianLaurentPolynomial(std::move(sigma));
}

}  // namespace fejer
