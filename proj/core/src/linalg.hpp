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

// Small dense helpers shared by the factorizer and verifier. Not installed.

#ifndef FEJER_SRC_LINALG_HPP
#define FEJER_SRC_LINALG_HPP

#include <cstdio>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "fejer/laurent.hpp"

namespace fejer::detail {

// 2-norm condition number; +infinity for an exactly singular matrix.
inline double condition_number(const MatrixCoefficient& a) {
    Eigen::JacobiSVD<MatrixCoefficient> svd(a);
    const auto& sv = svd.singularValues();
    const double smallest = sv(sv.size() - 1);
    if (smallest == 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / smallest;
}

// Three significant digits for messages.
inline std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

inline MatrixCoefficient hermitian_part(const MatrixCoefficient& a) { return 0.5 * (a + MatrixCoefficient(a.adjoint())); }

}  // namespace fejer::detail

#endif  // FEJER_SRC_LINALG_HPP
