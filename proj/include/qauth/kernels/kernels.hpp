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

// Arithmetic inner loops shared by the density-matrix simulator and the MLP:
// small complex matrix products (dimensions up to 8) and real dense
// matrix-vector products. A scalar reference implementation always exists;
// an AVX2 variant is selected at runtime when the CPU supports it. The two
// are equivalence-tested against each other.

#pragma once

#include <complex>
#include <string>

namespace qauth::kernels {

using cplx = std::complex<double>;

// Maximum complex matrix dimension the vector kernels are sized for.
inline constexpr int kMaxDim = 8;

using CGemmNNFn = void (*)(int n, const cplx* a, const cplx* b, cplx* c);
using CGemmNHFn = void (*)(int n, const cplx* a, const cplx* b, cplx* c);
using MatVecFn = void (*)(int rows, int cols, const double* w,
                          const double* x, const double* bias, double* y);

namespace scalar {
// c = a * b, row-major n-by-n complex.
void cgemm_nn(int n, const cplx* a, const cplx* b, cplx* c);
// c = a * b^dagger.
void cgemm_nh(int n, const cplx* a, const cplx* b, cplx* c);
// y = w * x + bias (bias may be null), row-major rows-by-cols.
void matvec(int rows, int cols, const double* w, const double* x,
            const double* bias, double* y);
}  // namespace scalar

namespace avx2 {
void cgemm_nn(int n, const cplx* a, const cplx* b, cplx* c);
void cgemm_nh(int n, const cplx* a, const cplx* b, cplx* c);
void matvec(int rows, int cols, const double* w, const double* x,
            const double* bias, double* y);
}  // namespace avx2

struct Backend {
    const char* name;
    CGemmNNFn cgemm_nn;
    CGemmNHFn cgemm_nh;
    MatVecFn matvec;
};

// Active backend. Chosen once at startup: AVX2 when compiled in and the CPU
// reports support, scalar otherwise. The QAUTH_KERNELS environment variable
// ("scalar" or "avx2") overrides the automatic choice.
const Backend& active();

// Switches the active backend by name; returns false if the name is unknown
// or unavailable on this machine.
bool select(const std::string& name);

const char* backend_name();

// True when the binary carries the AVX2 kernels and the CPU can run them.
bool avx2_available();

inline void cgemm_nn(int n, const cplx* a, const cplx* b, cplx* c) {
    active().cgemm_nn(n, a, b, c);
}
inline void cgemm_nh(int n, const cplx* a, const cplx* b, cplx* c) {
    active().cgemm_nh(n, a, b, c);
}
inline void matvec(int rows, int cols, const double* w, const double* x,
                   const double* bias, double* y) {
    active().matvec(rows, cols, w, x, bias, y);
}

// out = u * rho * u^dagger. `scratch` must hold n*n entries and may not
// alias the other arguments.
inline void sandwich(int n, const cplx* u, const cplx* rho, cplx* out,
                     cplx* scratch) {
    cgemm_nn(n, u, rho, scratch);
    cgemm_nh(n, scratch, u, out);
}

}  // namespace qauth::kernels
