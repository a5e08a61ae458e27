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

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include <Eigen/Eigenvalues>

#include "fejer/errors.hpp"
#include "fejer/laurent.hpp"
#include "support.hpp"

using namespace fejer;
using fejer::testing::Generator;
using fejer::testing::grid_point;
using fejer::testing::naive_evaluate;
using fejer::testing::scalar;
using fejer::testing::scalar_laurent;
using fejer::testing::scalar_poly;

namespace {

MatrixCoefficient e21() {
    MatrixCoefficient e = MatrixCoefficient::Zero(2, 2);
    e(1, 0) = 1.0;
    return e;
}

MatrixPolynomial shift_example() {
    return MatrixPolynomial({MatrixCoefficient::Identity(2, 2), e21()});
}

double max_abs(const MatrixCoefficient& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("evaluate_at on the documented examples") {
    const Complex i{0.0, 1.0};
    auto c = scalar_laurent({4.0});
    CHECK(std::abs(evaluate_at(c, i)(0, 0) - Complex(4.0)) < 1e-15);

    MatrixCoefficient expected(2, 2);
    expected << 1.0, 0.0, 1.0, 1.0;
    CHECK(max_abs(evaluate_at(shift_example(), 1.0) - expected) < 1e-15);

    auto s = scalar_laurent({5.0, 2.0});
    CHECK(std::abs(evaluate_at(s, -1.0)(0, 0) - Complex(1.0)) < 1e-14);
}

TEST_CASE("evaluate_at rejects bad points") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto x = scalar_poly({2.0, 1.0});
    CHECK_THROWS_AS(evaluate_at(x, Complex(nan, 0.0)), Error);
    auto s = scalar_laurent({5.0, 2.0});
    CHECK_THROWS_AS(evaluate_at(s, Complex(0.5, 0.0)), Error);
    CHECK_THROWS_AS(evaluate_at(s, Complex(0.0, std::numeric_limits<double>::infinity())), Error);
    // off the circle is fine for an ordinary polynomial
    CHECK(std::abs(evaluate_at(x, 3.0)(0, 0) - Complex(5.0)) < 1e-15);
}

TEST_CASE("Laurent values are Hermitian") {
    Generator gen(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = multiply_by_adjoint(gen.polynomial(3, 2));
        auto v = evaluate_at(s, fejer::testing::unit(gen.uniform(0.0, 6.3)));
        CHECK((v - v.adjoint()).norm() <= 1e-12 * (1.0 + v.norm()));
    }
}

TEST_CASE("construction validates coefficients") {
    SECTION("non-Hermitian sigma_0") {
        MatrixCoefficient s0(2, 2);
        s0 << 1.0, 2.0, 0.0, 1.0;
        try {
            HermitianLaurentPolynomial bad({s0});
            FAIL("accepted a non-Hermitian constant term");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidArgument);
            CHECK(std::string(e.what()).find("Hermitian") != std::string::npos);
        }
    }
    SECTION("mixed dimensions") {
        CHECK_THROWS_AS(MatrixPolynomial({MatrixCoefficient::Identity(2, 2), scalar(1.0)}), Error);
    }
    SECTION("non-square") {
        CHECK_THROWS_AS(MatrixPolynomial({MatrixCoefficient::Zero(2, 3)}), Error);
    }
    SECTION("non-finite entries") {
        CHECK_THROWS_AS(scalar_poly({Complex(std::numeric_limits<double>::quiet_NaN(), 0.0)}), Error);
    }
    SECTION("empty") { CHECK_THROWS_AS(MatrixPolynomial(std::vector<MatrixCoefficient>{}), Error); }
    SECTION("trailing coefficients are trimmed") {
        auto x = scalar_poly({2.0, 1.0, 1e-12, 0.0});
        CHECK(x.degree() == 1);
        auto s = scalar_laurent({5.0, 2.0, 1e-13});
        CHECK(s.order() == 1);
        CHECK(scalar_poly({0.0, 0.0}).degree() == 0);
    }
    SECTION("negative indices are adjoints") {
        MatrixCoefficient s1(2, 2);
        s1 << Complex(1, 2), 3.0, Complex(0, -1), 4.0;
        HermitianLaurentPolynomial s({MatrixCoefficient::Identity(2, 2) * 10.0, s1});
        CHECK(max_abs(s.coeff(-1) - s1.adjoint()) == 0.0);
        CHECK(max_abs(s.coeff(2)) == 0.0);
        CHECK(max_abs(s.coeff(-5)) == 0.0);
    }
}

TEST_CASE("sample_on_grid examples") {
    auto s = scalar_laurent({5.0, 2.0});
    auto f = sample_on_grid(s, 4);
    REQUIRE(f.size() == 4);
    const double expected[] = {9.0, 5.0, 1.0, 5.0};
    for (int j = 0; j < 4; ++j) CHECK(std::abs(f[j](0, 0) - Complex(expected[j])) < 1e-13);

    for (int K : {2, 8, 64}) {
        auto id = sample_on_grid(MatrixPolynomial::identity(3), K);
        REQUIRE(id.size() == K);
        for (int j = 0; j < K; ++j) CHECK(max_abs(id[j] - MatrixCoefficient::Identity(3, 3)) < 1e-15);
    }
}

TEST_CASE("sample_on_grid matches direct evaluation") {
    Generator gen(3);
    for (int trial = 0; trial < 5; ++trial) {
        auto x = gen.polynomial(3, 5);
        auto f = sample_on_grid(x, 64);
        double worst = 0.0;
        for (int j = 0; j < 64; ++j) worst = std::max(worst, max_abs(f[j] - naive_evaluate(x, grid_point(j, 64))));
        CHECK(worst <= 1e-12);

        auto s = multiply_by_adjoint(x);
        auto g = sample_on_grid(s, 64);
        worst = 0.0;
        for (int j = 0; j < 64; ++j) worst = std::max(worst, max_abs(g[j] - naive_evaluate(s, grid_point(j, 64))));
        CHECK(worst <= 1e-11);
    }
}

TEST_CASE("sample_on_grid rejects aliasing grids") {
    auto s = scalar_laurent({5.0, 2.0, 1.0});
    CHECK_THROWS_AS(sample_on_grid(s, 4), Error);  // needs K >= 6
    CHECK_NOTHROW(sample_on_grid(s, 8));
    CHECK_THROWS_AS(sample_on_grid(s, 12), Error);
    CHECK_THROWS_AS(sample_on_grid(scalar_poly({1.0, 1.0}), 2), Error);
}

TEST_CASE("coefficients_from_samples examples") {
    auto s = scalar_laurent({5.0, 2.0});
    auto c = coefficients_from_samples(sample_on_grid(s, 8), -1, 1);
    REQUIRE(c.size() == 3);
    CHECK(std::abs(c[0](0, 0) - Complex(2.0)) < 1e-14);
    CHECK(std::abs(c[1](0, 0) - Complex(5.0)) < 1e-14);
    CHECK(std::abs(c[2](0, 0) - Complex(2.0)) < 1e-14);

    auto id = coefficients_from_samples(sample_on_grid(MatrixPolynomial::identity(2), 8), 0, 0);
    REQUIRE(id.size() == 1);
    CHECK(max_abs(id[0] - MatrixCoefficient::Identity(2, 2)) < 1e-15);

    Generator gen(5);
    auto x = gen.polynomial(2, 3);
    auto back = coefficients_from_samples(sample_on_grid(x, 16), 0, 3);
    for (int n = 0; n <= 3; ++n) CHECK(max_abs(back[n] - x.coeff(n)) <= 1e-12);

    // window wider than the grid
    CHECK_THROWS_AS(coefficients_from_samples(sample_on_grid(x, 16), -8, 8), Error);
    CHECK_THROWS_AS(coefficients_from_samples(sample_on_grid(x, 16), 2, 1), Error);
}

TEST_CASE("multiply_by_adjoint examples") {
    auto s = multiply_by_adjoint(scalar_poly({2.0, 1.0}));
    REQUIRE(s.order() == 1);
    CHECK(std::abs(s.coeff(0)(0, 0) - Complex(5.0)) < 1e-15);
    CHECK(std::abs(s.coeff(1)(0, 0) - Complex(2.0)) < 1e-15);
    CHECK(std::abs(s.coeff(-1)(0, 0) - Complex(2.0)) < 1e-15);

    auto t = multiply_by_adjoint(shift_example());
    MatrixCoefficient s0(2, 2);
    s0 << 1.0, 0.0, 0.0, 2.0;
    CHECK(max_abs(t.coeff(0) - s0) < 1e-15);
    CHECK(max_abs(t.coeff(1) - e21()) < 1e-15);
}

TEST_CASE("multiply_by_adjoint agrees with pointwise products") {
    Generator gen(17);
    for (int r = 1; r <= 3; ++r) {
        auto x = gen.polynomial(r, 4);
        auto f = sample_on_grid(multiply_by_adjoint(x), 64);
        double worst = 0.0;
        for (int j = 0; j < 64; ++j) {
            MatrixCoefficient v = naive_evaluate(x, grid_point(j, 64));
            worst = std::max(worst, max_abs(f[j] - v * v.adjoint()));
        }
        CHECK(worst <= 1e-10);
    }
}

TEST_CASE("property: sampling round trip") {
    Generator gen(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = 1 + trial % 4;
        const int m = trial % 9;
        auto x = gen.polynomial(r, m);
        int K = next_power_of_two(2 * m + 2);
        if (trial % 3 == 0) K *= 2;
        auto back = coefficients_from_samples(sample_on_grid(x, K), 0, m);
        double worst = 0.0;
        for (int n = 0; n <= m; ++n) worst = std::max(worst, max_abs(back[n] - x.coeff(n)));
        INFO("r=" << r << " m=" << m << " K=" << K);
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("property: grid samples are Hermitian and products are PSD") {
    Generator gen(29);
    for (int trial = 0; trial < 30; ++trial) {
        const int r = 1 + trial % 4;
        const int m = trial % 6;
        auto x = gen.polynomial(r, m);
        auto s = multiply_by_adjoint(x);
        auto f = sample_on_grid(s, default_grid_size(m));
        for (int j = 0; j < f.size(); ++j) {
            const auto& v = f[j];
            CHECK((v - v.adjoint()).norm() <= 1e-10 * (1.0 + v.norm()));
            Eigen::SelfAdjointEigenSolver<MatrixCoefficient> eig(v);
            CHECK(eig.eigenvalues().minCoeff() >= -1e-10 * v.norm());
        }
    }
}

TEST_CASE("property: evaluate_at is linear") {
    Generator gen(31);
    for (int trial = 0; trial < 20; ++trial) {
        auto p = gen.polynomial(2, 3);
        auto q = gen.polynomial(2, 3);
        const Complex a = gen.complex_normal();
        std::vector<MatrixCoefficient> c;
        for (int n = 0; n <= 3; ++n) c.push_back(a * p.coeff(n) + q.coeff(n));
        MatrixPolynomial combo(c);
        const Complex z = gen.complex_normal();
        MatrixCoefficient lhs = evaluate_at(combo, z);
        MatrixCoefficient rhs = a * evaluate_at(p, z) + evaluate_at(q, z);
        CHECK(max_abs(lhs - rhs) <= 1e-12 * (1.0 + max_abs(rhs)));
    }
}

TEST_CASE("grid helpers") {
    CHECK(is_power_of_two(2));
    CHECK_FALSE(is_power_of_two(1));  // grids need K >= 2
    CHECK(is_power_of_two(64));
    CHECK_FALSE(is_power_of_two(0));
    CHECK_FALSE(is_power_of_two(12));
    CHECK(default_grid_size(0) == 8);
    CHECK(default_grid_size(1) == 16);
    CHECK(default_grid_size(8) == 128);
    CHECK(next_power_of_two(9) == 16);
    CHECK(std::abs(SampledMatrixFunction::grid_point(2, 8) - Complex(0.0, 1.0)) < 1e-15);
    CHECK_THROWS_AS(SampledMatrixFunction({scalar(1.0), scalar(1.0), scalar(1.0)}), Error);
}

TEST_CASE("coefficient_distance") {
    auto a = scalar_poly({2.0, 1.0});
    auto b = scalar_poly({2.0, 1.0, 0.5});
    CHECK(coefficient_distance(a, a) == 0.0);
    CHECK(coefficient_distance(a, b) == Catch::Approx(0.5));
}
