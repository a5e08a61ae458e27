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

#ifndef FEJER_ERRORS_HPP
#define FEJER_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace fejer {

enum class ErrorCode {
    InvalidArgument,
    DimensionMismatch,
    NotPositiveDefinite,
    DegenerateDeterminant,
    NoConvergence,
    CholeskyBreakdown,
    SingularIterate,
    OddBoundaryMultiplicity,
    SingularLeadingCoefficient,
    SingularFactorOnGrid,
    IdenticallyZeroDeterminant,
    RetryExhausted,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so the
// CLI can map it to an exit status.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

    ErrorCode code() const noexcept { return code_; }
    // what() without the code prefix.
    const std::string& message() const noexcept { return message_; }

   private:
    ErrorCode code_;
    std::string message_;
};

}  // namespace fejer

#endif  // FEJER_ERRORS_HPP
