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

#include "fejer/roots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "fejer/errors.hpp"

namespace fejer {

namespace {

Complex evaluate_derivative(std::span<const Complex> c, Complex z) noexcept {
    Complex acc{0.0, 0.0};
    for (std::size_t k = c.size() - 1; k >= 1; --k) acc = acc * z + static_cast<double>(k) * c[k];
    return acc;
}

Complex polish(std::span<const Complex> c, Complex z) {
    Complex value = evaluate_scalar(c, z);
    for (int it = 0; it < 4 && std::abs(value) > 0.0; ++it) {
        const Complex slope = evaluate_derivative(c, z);
        if (std::abs(slope) == 0.0) break;
        const Complex candidate = z - value / slope;
        const Complex candidate_value = evaluate_scalar(c, candidate);
        if (!(std::abs(candidate_value) < std::abs(value))) break;
        z = candidate;
        value = candidate_value;
    }
    return z;
}

}  // namespace

Complex evaluate_scalar(std::span<const Complex> coeffs, Complex z) noexcept {
    Complex acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs, double relative_trim) {
    double biggest = 0.0;
    for (const auto& c : coeffs) biggest = std::max(biggest, std::abs(c));
    if (biggest == 0.0) throw Error(ErrorCode::InvalidArgument, "polynomial is identically zero");
    const double floor = relative_trim * biggest;

    std::size_t hi = coeffs.size();
    while (hi > 0 && std::abs(coeffs[hi - 1]) <= floor) --hi;
    std::size_t lo = 0;
    while (lo < hi && std::abs(coeffs[lo]) <= floor) ++lo;

    std::vector<Complex> roots(lo, Complex{0.0, 0.0});
    const auto reduced = coeffs.subspan(lo, hi - lo);
    const auto n = static_cast<Eigen::Index>(reduced.size()) - 1;
    if (n <= 0) return roots;
    if (n == 1) {
        roots.push_back(-reduced[0] / reduced[1]);
        return roots;
    }

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) companion(i, n - 1) = -reduced[static_cast<std::size_t>(i)] / reduced.back();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw Error(ErrorCode::InvalidArgument, "companion eigenvalue solver failed");
    for (Eigen::Index i = 0; i < n; ++i) roots.push_back(polish(reduced, solver.eigenvalues()(i)));
    return roots;
}

std::vector<Complex> polynomial_from_reciprocal_roots(std::span<const Complex> roots) {
    std::vector<Complex> poly{Complex{1.0, 0.0}};
    for (const auto& root : roots) {
        const Complex a = -1.0 / root;
        poly.push_back(Complex{0.0, 0.0});
        for (std::size_t k = poly.size() - 1; k >= 1; --k) poly[k] += a * poly[k - 1];
    }
    return poly;
}

}  // namespace fejer
