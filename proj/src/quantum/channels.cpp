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

#include "qauth/quantum/channels.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "qauth/quantum/gates.hpp"

namespace qauth::quantum {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(what) +
                                    ": probability outside [0,1]");
}

void check_time(double t, double constant, const char* what) {
    if (!(t >= 0.0))
        throw std::invalid_argument(std::string(what) + ": negative duration");
    if (!(constant > 0.0))
        throw std::invalid_argument(std::string(what) +
                                    ": nonpositive time constant");
}

}  // namespace

void depolarize(QuantumState& state, std::span<const char> targets, double p) {
    check_probability(p, "depolarize");
    if (p == 0.0) return;
    const int d = state.dim();
    const int nq = state.num_qubits();

    int target_mask = 0;
    for (char label : targets)
        target_mask |= 1 << (nq - 1 - state.position(label));
    const int dt = 1 << static_cast<int>(targets.size());
    const int rest_mask = (d - 1) & ~target_mask;

    // mixed[r][c] = delta on target bits * Tr_targets(rho)[rest] / dt
    QuantumState mixed = state;
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            if ((r & target_mask) != (c & target_mask)) {
                mixed.at(r, c) = cplx{0.0, 0.0};
                continue;
            }
            cplx sum{0.0, 0.0};
            // Sum rho over all values of the target bits with the rest fixed.
            for (int t = 0;;) {
                sum += state.at((r & rest_mask) | t, (c & rest_mask) | t);
                // Next subset of target_mask.
                t = (t - target_mask) & target_mask;
                if (t == 0) break;
            }
            mixed.at(r, c) = sum / static_cast<double>(dt);
        }
    }
    for (int i = 0; i < d * d; ++i)
        state.data()[i] = (1.0 - p) * state.data()[i] + p * mixed.data()[i];
}

void amplitude_damp(QuantumState& state, char target, double t, double t1) {
    check_time(t, t1, "amplitude_damp");
    const double gamma = 1.0 - std::exp(-t / t1);
    if (gamma == 0.0) return;
    const double s = std::sqrt(1.0 - gamma);
    const double g = std::sqrt(gamma);
    const std::array<cplx, 8> kraus = {
        cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{s, 0},   // K0
        cplx{0, 0}, cplx{g, 0}, cplx{0, 0}, cplx{0, 0}};  // K1
    const char targets[1] = {target};
    state.apply_kraus(kraus, 2, std::span<const char>(targets, 1));
}

void phase_damp(QuantumState& state, char target, double t, double t2) {
    check_time(t, t2, "phase_damp");
    const double lambda = 1.0 - std::exp(-t / t2);
    if (lambda == 0.0) return;
    // Off-diagonals shrink by (1 - lambda) = exp(-t/T2).
    const double pflip = 0.5 * lambda;
    const double a = std::sqrt(1.0 - pflip);
    const double b = std::sqrt(pflip);
    const std::array<cplx, 8> kraus = {
        cplx{a, 0}, cplx{0, 0}, cplx{0, 0}, cplx{a, 0},    // sqrt(1-p) I
        cplx{b, 0}, cplx{0, 0}, cplx{0, 0}, cplx{-b, 0}};  // sqrt(p) Z
    const char targets[1] = {target};
    state.apply_kraus(kraus, 2, std::span<const char>(targets, 1));
}

int flip_readout(int bit, double p, Rng& rng) {
    check_probability(p, "flip_readout");
    if (bit != 0 && bit != 1)
        throw std::invalid_argument("flip_readout: bit must be 0 or 1");
    return rng.bernoulli(p) ? bit ^ 1 : bit;
}

}  // namespace qauth::quantum
