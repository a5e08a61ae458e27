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

#include "fejer/errors.hpp"

namespace fejer {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::NotPositiveDefinite:
            return "NotPositiveDefinite";
        case ErrorCode::DegenerateDeterminant:
            return "DegenerateDeterminant";
        case ErrorCode::NoConvergence:
            return "NoConvergence";
        case ErrorCode::CholeskyBreakdown:
            return "CholeskyBreakdown";
        case ErrorCode::SingularIterate:
            return "SingularIterate";
        case ErrorCode::OddBoundaryMultiplicity:
            return "OddBoundaryMultiplicity";
        case ErrorCode::SingularLeadingCoefficient:
            return "SingularLeadingCoefficient";
        case ErrorCode::SingularFactorOnGrid:
            return "SingularFactorOnGrid";
        case ErrorCode::IdenticallyZeroDeterminant:
            return "IdenticallyZeroDeterminant";
        case ErrorCode::RetryExhausted:
            return "RetryExhausted";
    }
    return "UnknownError";
}

}  // namespace fejer
