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

#ifndef FEJER_ROOTS_HPP
#define FEJER_ROOTS_HPP

#include <span>
#include <vector>

#include "fejer/laurent.hpp"

namespace fejer {

// Roots of c[0] + c[1] z + ... + c[n] z^n from the eigenvalues of the
// companion matrix, each refined by a few guarded Newton steps.
//
// Leading coefficients with |c_k| <= relative_trim * max|c| are dropped
// (roots at infinity). Trailing ones below the same threshold become roots
// at exactly zero. Throws InvalidArgument if
// every coefficient vanishes.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs, double relative_trim = 0.0);

// Horner evaluation of a scalar polynomial with ascending coefficients.
Complex evaluate_scalar(std::span<const Complex> coeffs, Complex z) noexcept;

// Ascending coefficients of prod_i (1 - z / roots[i]).
std::vector<Complex> polynomial_from_reciprocal_roots(std::span<const Complex> roots);

}  // namespace fejer

#endif  // FEJER_ROOTS_HPP
