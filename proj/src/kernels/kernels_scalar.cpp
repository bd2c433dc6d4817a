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

// Scalar reference kernels. These define the semantics the vector variants
// are tested against.

#include "qauth/kernels/kernels.hpp"

namespace qauth::kernels::scalar {

void cgemm_nn(int n, const cplx* a, const cplx* b, cplx* c) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cplx sum{0.0, 0.0};
            for (int k = 0; k < n; ++k) sum += a[i * n + k] * b[k * n + j];
            c[i * n + j] = sum;
        }
    }
}

void cgemm_nh(int n, const cplx* a, const cplx* b, cplx* c) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            cplx sum{0.0, 0.0};
            for (int k = 0; k < n; ++k)
                sum += a[i * n + k] * std::conj(b[j * n + k]);
            c[i * n + j] = sum;
        }
    }
}

void matvec(int rows, int cols, const double* w, const double* x,
            const double* bias, double* y) {
    for (int r = 0; r < rows; ++r) {
        double sum = bias != nullptr ? bias[r] : 0.0;
        const double* row = w + static_cast<std::size_t>(r) * cols;
        for (int k = 0; k < cols; ++k) sum += row[k] * x[k];
        y[r] = sum;
    }
}

}  // namespace qauth::kernels::scalar
