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

// Oracles and generators for the test suites. Everything here is written
// directly from definitions and avoids the library's FFT, Horner and
// factorization paths.

#ifndef FEJER_TESTS_SUPPORT_HPP
#define FEJER_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "fejer/laurent.hpp"

namespace fejer::testing {

inline MatrixCoefficient scalar(Complex v) { return MatrixCoefficient::Constant(1, 1, v); }

inline MatrixPolynomial scalar_poly(std::vector<Complex> c) {
    std::vector<MatrixCoefficient> out;
    for (auto v : c) out.push_back(scalar(v));
    return MatrixPolynomial(std::move(out));
}

inline HermitianLaurentPolynomial scalar_laurent(std::vector<Complex> c) {
    std::vector<MatrixCoefficient> out;
    for (auto v : c) out.push_back(scalar(v));
    return HermitianLaurentPolynomial(std::move(out));
}

// sum_n rho_n z^n with explicit powers.
inline MatrixCoefficient naive_evaluate(const MatrixPolynomial& p, Complex z) {
    MatrixCoefficient acc = MatrixCoefficient::Zero(p.dim(), p.dim());
    for (int n = 0; n <= p.degree(); ++n) acc += p.coeff(n) * std::pow(z, n);
    return acc;
}

// sum_{n=-m}^{m} sigma_n z^n with explicit powers.
inline MatrixCoefficient naive_evaluate(const HermitianLaurentPolynomial& s, Complex z) {
    MatrixCoefficient acc = MatrixCoefficient::Zero(s.dim(), s.dim());
    for (int n = -s.order(); n <= s.order(); ++n) acc += s.coeff(n) * std::pow(z, n);
    return acc;
}

inline Complex unit(double theta) { return std::polar(1.0, theta); }

inline Complex grid_point(int j, int K) { return unit(2.0 * std::numbers::pi * j / K); }

class Generator {
   public:
    explicit Generator(unsigned seed) : engine_(seed) {}

    Complex complex_normal() { return {normal_(engine_), normal_(engine_)}; }

    MatrixCoefficient matrix(int r) {
        MatrixCoefficient c(r, r);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) c(a, b) = complex_normal();
        return c;
    }

    MatrixPolynomial polynomial(int r, int m) {
        std::vector<MatrixCoefficient> c;
        for (int n = 0; n <= m; ++n) c.push_back(matrix(r));
        return MatrixPolynomial(std::move(c));
    }

    // Haar-like unitary from the QR factorization of a Gaussian matrix.
    MatrixCoefficient unitary(int r) {
        Eigen::HouseholderQR<MatrixCoefficient> qr(matrix(r));
        return qr.householderQ();
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

   private:
    std::mt19937 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace fejer::testing

#endif  // FEJER_TESTS_SUPPORT_HPP
