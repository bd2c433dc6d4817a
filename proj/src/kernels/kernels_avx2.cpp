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

// AVX2/FMA kernels. Complex numbers are processed two at a time as
// [re0, im0, re1, im1] lanes of a __m256d. Compiled only when the compiler
// accepts -mavx2 -mfma; whether they run is decided at startup from CPUID.

#include "qauth/kernels/kernels.hpp"

#ifdef QAUTH_HAVE_AVX2_BUILD

#include <immintrin.h>

namespace qauth::kernels::avx2 {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// Sum of even lanes minus sum of odd lanes.
inline double hsum_even_minus_odd(__m256d v) {
    const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
    return hsum(_mm256_mul_pd(v, sign));
}

}  // namespace

void cgemm_nn(int n, const cplx* a, const cplx* b, cplx* c) {
    if (n > kMaxDim) {
        scalar::cgemm_nn(n, a, b, c);
        return;
    }
    const auto* bd = reinterpret_cast<const double*>(b);
    auto* cd = reinterpret_cast<double*>(c);
    const int nv = n / 2;  // full two-complex vectors per row
    const bool tail = (n & 1) != 0;
    for (int i = 0; i < n; ++i) {
        __m256d acc[kMaxDim / 2];
        for (int v = 0; v < nv; ++v) acc[v] = _mm256_setzero_pd();
        cplx tail_acc{0.0, 0.0};
        for (int k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            const __m256d ar = _mm256_set1_pd(aik.real());
            const __m256d ai = _mm256_set1_pd(aik.imag());
            const double* brow = bd + 2 * static_cast<std::size_t>(k) * n;
            for (int v = 0; v < nv; ++v) {
                const __m256d bv = _mm256_loadu_pd(brow + 4 * v);
                const __m256d bswap = _mm256_permute_pd(bv, 0x5);
                acc[v] = _mm256_add_pd(
                    acc[v], _mm256_fmaddsub_pd(ar, bv, _mm256_mul_pd(ai, bswap)));
            }
            if (tail) tail_acc += aik * b[k * n + (n - 1)];
        }
        double* crow = cd + 2 * static_cast<std::size_t>(i) * n;
        for (int v = 0; v < nv; ++v) _mm256_storeu_pd(crow + 4 * v, acc[v]);
        if (tail) c[i * n + (n - 1)] = tail_acc;
    }
}

void cgemm_nh(int n, const cplx* a, const cplx* b, cplx* c) {
    if (n > kMaxDim) {
        scalar::cgemm_nh(n, a, b, c);
        return;
    }
    const auto* ad = reinterpret_cast<const double*>(a);
    const auto* bd = reinterpret_cast<const double*>(b);
    const int nv = n / 2;
    const bool tail = (n & 1) != 0;
    for (int i = 0; i < n; ++i) {
        const double* arow = ad + 2 * static_cast<std::size_t>(i) * n;
        for (int j = 0; j < n; ++j) {
            const double* brow = bd + 2 * static_cast<std::size_t>(j) * n;
            // a * conj(b): re accumulates ar*br + ai*bi pairwise, im
            // accumulates ai*br - ar*bi via the swapped lanes.
            __m256d racc = _mm256_setzero_pd();
            __m256d iacc = _mm256_setzero_pd();
            for (int v = 0; v < nv; ++v) {
                const __m256d av = _mm256_loadu_pd(arow + 4 * v);
                const __m256d bv = _mm256_loadu_pd(brow + 4 * v);
                racc = _mm256_fmadd_pd(av, bv, racc);
                iacc = _mm256_fmadd_pd(_mm256_permute_pd(av, 0x5), bv, iacc);
            }
            double re = hsum(racc);
            double im = hsum_even_minus_odd(iacc);
            if (tail) {
                const cplx t = a[i * n + (n - 1)] * std::conj(b[j * n + (n - 1)]);
                re += t.real();
                im += t.imag();
            }
            c[i * n + j] = {re, im};
        }
    }
}

void matvec(int rows, int cols, const double* w, const double* x,
            const double* bias, double* y) {
    for (int r = 0; r < rows; ++r) {
        const double* row = w + static_cast<std::size_t>(r) * cols;
        __m256d acc = _mm256_setzero_pd();
        int k = 0;
        for (; k + 4 <= cols; k += 4)
            acc = _mm256_fmadd_pd(_mm256_loadu_pd(row + k),
                                  _mm256_loadu_pd(x + k), acc);
        double sum = hsum(acc);
        for (; k < cols; ++k) sum += row[k] * x[k];
        y[r] = (bias != nullptr ? bias[r] : 0.0) + sum;
    }
}

}  // namespace qauth::kernels::avx2

#endif  // QAUTH_HAVE_AVX2_BUILD
