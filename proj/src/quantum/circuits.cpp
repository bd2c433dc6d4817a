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

#include "qauth/quantum/circuits.hpp"

#include <cmath>
#include <stdexcept>

#include "qauth/quantum/channels.hpp"
#include "qauth/quantum/gates.hpp"

namespace qauth::quantum {

namespace {

constexpr char kCT[2] = {kControl, kTarget};
constexpr char kC[1] = {kControl};

// Probabilities within this tolerance of 0 or 1 are treated as exact, so a
// noiseless run produces deterministic outcomes instead of depending on a
// 1e-16 residue.
constexpr double kSnapTol = 1e-12;

double snap(double p) {
    if (p > 1.0 - kSnapTol) return 1.0;
    if (p < kSnapTol) return 0.0;
    return p;
}

MeasurementResult sample_control(QuantumState state, Rng& rng,
                                 double readout_error) {
    const double p0 = snap(state.prob_zero(kControl));
    const int outcome = rng.uniform() < p0 ? 0 : 1;
    const double prob = outcome == 0 ? p0 : 1.0 - p0;
    state.project(kControl, outcome);
    MeasurementResult result{outcome, prob, std::move(state)};
    if (readout_error > 0.0)
        result.outcome = flip_readout(result.outcome, readout_error, rng);
    return result;
}

void check_ct(const QuantumState& state, const char* what) {
    if (!state.has_register(kControl) || !state.has_register(kTarget))
        throw std::invalid_argument(std::string(what) +
                                    ": state must carry registers C and T");
}

}  // namespace

QuantumState generation_stage(GateChoice m, const GateErrors& errors) {
    QuantumState state{kControl, kTarget};
    state.apply_unitary(kHadamard, {kControl});
    if (errors.hadamard_c > 0.0)
        depolarize(state, std::span<const char>(kC, 1), errors.hadamard_c);
    const bool cx = m == GateChoice::cx;
    state.apply_unitary(cx ? kControlledX : kControlledZX,
                        {kControl, kTarget});
    const double gate_err = cx ? errors.gate_cx : errors.gate_czx;
    if (gate_err > 0.0)
        depolarize(state, std::span<const char>(kCT, 2), gate_err);
    return state;
}

MeasurementResult verification_stage(const QuantumState& state, Rng& rng,
                                     const GateErrors& errors) {
    check_ct(state, "verification_stage");
    QuantumState work = state;
    work.apply_unitary(kAntiControlledX, {kControl, kTarget});
    work.apply_unitary(kHadamard, {kControl});
    if (errors.hadamard_c > 0.0)
        depolarize(work, std::span<const char>(kC, 1), errors.hadamard_c);
    return sample_control(std::move(work), rng, errors.readout_c);
}

double verification_prob_zero(const QuantumState& state,
                              const GateErrors& errors) {
    check_ct(state, "verification_prob_zero");
    QuantumState work = state;
    work.apply_unitary(kAntiControlledX, {kControl, kTarget});
    work.apply_unitary(kHadamard, {kControl});
    if (errors.hadamard_c > 0.0)
        depolarize(work, std::span<const char>(kC, 1), errors.hadamard_c);
    double p0 = work.prob_zero(kControl);
    if (errors.readout_c > 0.0)
        p0 = p0 * (1.0 - errors.readout_c) + (1.0 - p0) * errors.readout_c;
    return p0;
}

MeasurementResult protocol_half_stage(const QuantumState& state, Rng& rng,
                                      const GateErrors& errors) {
    check_ct(state, "protocol_half_stage");
    QuantumState work = state;
    // X on C controlled by T: same matrix as the anti-controlled X read over
    // (T, C) ordering.
    work.apply_unitary(kControlledX, {kTarget, kControl});
    return sample_control(std::move(work), rng, errors.readout_c);
}

double protocol_half_prob_zero(const QuantumState& state) {
    check_ct(state, "protocol_half_prob_zero");
    QuantumState work = state;
    work.apply_unitary(kControlledX, {kTarget, kControl});
    return work.prob_zero(kControl);
}

QuantumState tamper_oracle(GateChoice m, std::span<const cplx> g_ta,
                           const QuantumState& rho_a) {
    if (g_ta.size() != 16)
        throw std::invalid_argument("tamper_oracle: G_TA must be 4x4");
    if (unitarity_defect(g_ta) > 1e-10)
        throw std::invalid_argument("tamper_oracle: G_TA is not unitary");
    if (rho_a.num_qubits() != 1)
        throw std::invalid_argument("tamper_oracle: attacker state is 1 qubit");
    QuantumState attacker = rho_a;
    if (attacker.labels()[0] != kAttacker)
        attacker.relabel(attacker.labels()[0], kAttacker);

    QuantumState overall = generation_stage(m).tensor(attacker);
    const char ta[2] = {kTarget, kAttacker};
    overall.apply_unitary(g_ta, std::span<const char>(ta, 2));
    return overall.partial_trace(kTarget);
}

QuantumState haar_random_qubit(char label, Rng& rng) {
    const cplx a = rng.gaussian_complex();
    const cplx b = rng.gaussian_complex();
    const cplx amps[2] = {a, b};
    const char labels[1] = {label};
    return QuantumState::pure(std::span<const char>(labels, 1),
                              std::span<const cplx>(amps, 2));
}

std::vector<cplx> haar_random_unitary(int dim, Rng& rng) {
    if (dim < 1) throw std::invalid_argument("haar_random_unitary: dim");
    std::vector<cplx> u(static_cast<std::size_t>(dim) * dim);
    for (auto& v : u) v = rng.gaussian_complex();
    // Gram-Schmidt over columns with R_kk > 0, which makes the result
    // Haar-distributed for a Ginibre start.
    for (int col = 0; col < dim; ++col) {
        for (int prev = 0; prev < col; ++prev) {
            cplx overlap{0.0, 0.0};
            for (int r = 0; r < dim; ++r)
                overlap += std::conj(u[r * dim + prev]) * u[r * dim + col];
            for (int r = 0; r < dim; ++r)
                u[r * dim + col] -= overlap * u[r * dim + prev];
        }
        double norm = 0.0;
        for (int r = 0; r < dim; ++r) norm += std::norm(u[r * dim + col]);
        norm = std::sqrt(norm);
        if (norm < 1e-12)
            throw std::runtime_error("haar_random_unitary: degenerate draw");
        for (int r = 0; r < dim; ++r) u[r * dim + col] /= norm;
    }
    return u;
}

}  // namespace qauth::quantum
