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

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <complex>
#include <vector>

#include "fejer/errors.hpp"
#include "fejer/roots.hpp"
#include "support.hpp"

using fejer::Complex;
using fejer::polynomial_roots;

namespace {

// Closest root distance for each expected value.
double match_error(std::vector<Complex> got, const std::vector<Complex>& want) {
    if (got.size() != want.size()) return 1e300;
    double worst = 0.0;
    for (auto w : want) {
        auto it = std::min_element(got.begin(), got.end(),
                                   [&](Complex a, Complex b) { return std::abs(a - w) < std::abs(b - w); });
        worst = std::max(worst, std::abs(*it - w));
        got.erase(it);
    }
    return worst;
}

// Ascending coefficients of prod (z - a).
std::vector<Complex> from_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> c{1.0};
    for (auto a : roots) {
        std::vector<Complex> next(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= a * c[k];
        }
        c = next;
    }
    return c;
}

}  // namespace

TEST_CASE("quadratic roots") {
    std::vector<Complex> c{2.0, 5.0, 2.0};
    CHECK(match_error(polynomial_roots(c), {-2.0, -0.5}) < 1e-14);
}

TEST_CASE("linear and constant polynomials") {
    std::vector<Complex> lin{1.0, 2.0};
    CHECK(match_error(polynomial_roots(lin), {-0.5}) < 1e-15);
    std::vector<Complex> cst{3.0};
    CHECK(polynomial_roots(cst).empty());
}

TEST_CASE("zero roots from vanishing low coefficients") {
    std::vector<Complex> c{0.0, 0.0, 1.0, 1.0};  // z^2 (1 + z)
    CHECK(match_error(polynomial_roots(c), {0.0, 0.0, -1.0}) < 1e-14);
}

TEST_CASE("relative trim drops negligible leading terms") {
    std::vector<Complex> c{2.0, 5.0, 2.0, 1e-18};
    CHECK(polynomial_roots(c, 1e-13).size() == 2);
}

TEST_CASE("zero polynomial is rejected") {
    std::vector<Complex> c{0.0, 0.0};
    CHECK_THROWS_AS(polynomial_roots(c), fejer::Error);
}

TEST_CASE("random root sets are recovered") {
    fejer::testing::Generator gen(41);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> roots;
        const int n = 1 + trial % 10;
        for (int k = 0; k < n; ++k) roots.push_back(gen.complex_normal());
        auto c = from_roots(roots);
        CHECK(match_error(polynomial_roots(c), roots) < 1e-8);
    }
}

TEST_CASE("reciprocal root product") {
    std::vector<Complex> roots{-2.0, Complex(0.0, 3.0)};
    auto c = fejer::polynomial_from_reciprocal_roots(roots);
    REQUIRE(c.size() == 3);
    for (auto a : roots) CHECK(std::abs(fejer::evaluate_scalar(c, a)) < 1e-14);
    CHECK(std::abs(c[0] - Complex(1.0)) < 1e-15);
}
