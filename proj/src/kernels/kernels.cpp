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

#include "qauth/kernels/kernels.hpp"

#include <cstdlib>

namespace qauth::kernels {

namespace {

const Backend kScalar{"scalar", &scalar::cgemm_nn, &scalar::cgemm_nh,
                      &scalar::matvec};

#ifdef QAUTH_HAVE_AVX2_BUILD
const Backend kAvx2{"avx2", &avx2::cgemm_nn, &avx2::cgemm_nh, &avx2::matvec};
#endif

bool cpu_has_avx2() {
#if defined(QAUTH_HAVE_AVX2_BUILD) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Backend* pick_default() {
#ifdef QAUTH_HAVE_AVX2_BUILD
    if (const char* env = std::getenv("QAUTH_KERNELS")) {
        const std::string want(env);
        if (want == "scalar") return &kScalar;
        if (want == "avx2" && cpu_has_avx2()) return &kAvx2;
    }
    if (cpu_has_avx2()) return &kAvx2;
#else
    if (const char* env = std::getenv("QAUTH_KERNELS")) (void)env;
#endif
    return &kScalar;
}

const Backend*& active_slot() {
    static const Backend* backend = pick_default();
    return backend;
}

}  // namespace

const Backend& active() { return *active_slot(); }

bool select(const std::string& name) {
    if (name == "scalar") {
        active_slot() = &kScalar;
        return true;
    }
#ifdef QAUTH_HAVE_AVX2_BUILD
    if (name == "avx2" && cpu_has_avx2()) {
        active_slot() = &kAvx2;
        return true;
    }
#endif
    return false;
}

const char* backend_name() { return active().name; }

bool avx2_available() { return cpu_has_avx2(); }

}  // namespace qauth::kernels
