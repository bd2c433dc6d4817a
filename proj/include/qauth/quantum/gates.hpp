// Copyright 2026 the qauth authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <span>

namespace qauth::quantum {

using cplx = std::complex<double>;

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

// Single-qubit gates, row-major.
inline constexpr std::array<cplx, 4> kHadamard = {
    cplx{kInvSqrt2, 0}, cplx{kInvSqrt2, 0},
    cplx{kInvSqrt2, 0}, cplx{-kInvSqrt2, 0}};
inline constexpr std::array<cplx, 4> kPauliX = {
    cplx{0, 0}, cplx{1, 0},
    cplx{1, 0}, cplx{0, 0}};
inline constexpr std::array<cplx, 4> kPauliZ = {
    cplx{1, 0}, cplx{0, 0},
    cplx{0, 0}, cplx{-1, 0}};
// Z * X (first X, then Z).
inline constexpr std::array<cplx, 4> kZX = {
    cplx{0, 0}, cplx{1, 0},
    cplx{-1, 0}, cplx{0, 0}};

// Two-qubit gates over (control, target) with the control on the most
// significant bit.
//
// X on the target when the control is 1.
inline constexpr std::array<cplx, 16> kControlledX = {
    cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0},
    cplx{0, 0}, cplx{1, 0}, cplx{0, 0}, cplx{0, 0},
    cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0},
    cplx{0, 0}, cplx{0, 0}, cplx{1, 0}, cplx{0, 0}};
// ZX on the target when the control is 1.
inline constexpr std::array<cplx, 16> kControlledZX = {
    cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0},
    cplx{0, 0}, cplx{1, 0}, cplx{0, 0}, cplx{0, 0},
    cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0},
    cplx{0, 0}, cplx{0, 0}, cplx{-1, 0}, cplx{0, 0}};
// X on the target when the control is 0.
inline constexpr std::array<cplx, 16> kAntiControlledX = {
    cplx{0, 0}, cplx{1, 0}, cplx{0, 0}, cplx{0, 0},
    cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0},
    cplx{0, 0}, cplx{0, 0}, cplx{1, 0}, cplx{0, 0},
    cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}};

// max |U^dagger U - I| over all entries.
double unitarity_defect(std::span<const cplx> u);

}  // namespace qauth::quantum
