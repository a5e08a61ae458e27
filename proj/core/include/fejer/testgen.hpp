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

#ifndef FEJER_TESTGEN_HPP
#define FEJER_TESTGEN_HPP

#include <cstdint>
#include <random>

#include "fejer/laurent.hpp"

namespace fejer {

// Seedable generator with a fixed, documented output sequence:
// std::mt19937_64 seeded with one SplitMix64 output of (seed + stream), and
// standard normals from the Box-Muller transform on 53-bit uniforms. Both
// engines are specified bit-exactly by their published algorithms, so the
// sequence does not depend on the standard library's distributions.
class Rng {
   public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64() { return engine_(); }
    // Uniform on (0, 1].
    double uniform();
    double normal();
    // (N(0,1) + i N(0,1)) / sqrt(2)
    Complex complex_normal();

    static std::uint64_t splitmix64(std::uint64_t x) noexcept;

   private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

struct InstanceBundle {
    HermitianLaurentPolynomial spectrum;
    MatrixPolynomial ground_truth;
    std::uint64_t seed = 0;
    // min |root of det ground_truth| - 1 (+infinity when det is constant)
    double root_margin = 0.0;
    // largest over smallest eigenvalue of S across the verification grid
    double condition_estimate = 0.0;
    bool boundary = false;
    // 1 + number of rejected draws
    int attempts = 1;
};

// Random canonical outer factor (rescaled so every det root has modulus at
// least 1 + root_margin) together with its spectrum x x^*.
InstanceBundle generate_instance(int r, int m, std::uint64_t seed, double root_margin);

// Like generate_instance for order m - 1, then one channel is multiplied by
// (1 + z e^{-i theta}) / sqrt(2), putting a det root exactly on the circle.
InstanceBundle generate_boundary_instance(int r, int m, std::uint64_t seed);

}  // namespace fejer

#endif  // FEJER_TESTGEN_HPP
