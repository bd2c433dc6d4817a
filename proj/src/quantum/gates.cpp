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

#include "qauth/quantum/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qauth::quantum {

double unitarity_defect(std::span<const cplx> u) {
    int n = 0;
    while (n * n < static_cast<int>(u.size())) ++n;
    if (n * n != static_cast<int>(u.size()))
        throw std::invalid_argument("unitarity_defect: matrix is not square");
    double defect = 0.0;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            cplx sum{0.0, 0.0};
            for (int k = 0; k < n; ++k)
                sum += std::conj(u[k * n + r]) * u[k * n + c];
            const cplx expect = r == c ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            defect = std::max(defect, std::abs(sum - expect));
        }
    }
    return defect;
}

}  // namespace qauth::quantum
