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

#include "qauth/auth/protocol.hpp"

#include <cmath>
#include <stdexcept>

#include "qauth/quantum/channels.hpp"

namespace qauth::auth {

using quantum::GateChoice;
using quantum::GateErrors;
using quantum::QuantumState;

GateChoiceKey GateChoiceKey::random(int lambda, Rng& rng) {
    if (lambda < 1) throw std::invalid_argument("GateChoiceKey: lambda >= 1");
    GateChoiceKey key;
    key.bits.resize(lambda);
    for (auto& b : key.bits) b = static_cast<std::uint8_t>(rng.bit());
    return key;
}

GateChoiceKey GateChoiceKey::all_cx(int lambda) {
    if (lambda < 1) throw std::invalid_argument("GateChoiceKey: lambda >= 1");
    GateChoiceKey key;
    key.bits.assign(lambda, 0);
    return key;
}

Transcript run_session(const GateChoiceKey& key,
                       const timing::SessionTiming& timing,
                       const noise::HardwareParams& params, Role role,
                       Rng& rng, LossPolicy loss_policy) {
    if (key.lambda() != timing.lambda)
        throw std::invalid_argument("run_session: key/timing length mismatch");
    params.validate();

    const GateErrors errors{params.err_hadamard_c, params.err_gate_cx,
                            params.err_gate_czx, params.err_readout_c};

    // The generated pair is the same for every shot with the same key bit;
    // only storage durations, loss draws, and measurements vary.
    const QuantumState generated[2] = {
        quantum::generation_stage(GateChoice::cx, errors),
        quantum::generation_stage(GateChoice::czx, errors)};

    Transcript transcript;
    transcript.role = role;
    transcript.s.reserve(timing.lambda);
    transcript.outcomes.reserve(timing.lambda);
    transcript.losses.reserve(timing.lambda);

    for (const auto& rec : timing.records) {
        const int m = key.bits[rec.shot_index];
        const int expected = m;

        const double p_survive =
            noise::shot_survival_prob(timing.distance_km, rec.t_store_user_s,
                                      rec.t_store_server_s, params);
        if (!noise::sample_loss(p_survive, rng)) {
            const noise::LossEvent loss{
                noise::LossCause::dark_count_substitution, rec.shot_index};
            if (loss_policy == LossPolicy::discard) {
                // Shot dropped: keep the ledger entry, no transcript bit.
                transcript.losses.push_back(loss);
                continue;
            }
            const int outcome = rng.bit();
            transcript.outcomes.push_back(static_cast<std::uint8_t>(outcome));
            transcript.s.push_back(outcome == expected ? 1 : 0);
            transcript.losses.push_back(loss);
            continue;
        }

        QuantumState state = generated[m];
        amplitude_damp(state, quantum::kTarget, rec.t_store_user_s, params.t1_s);
        phase_damp(state, quantum::kTarget, rec.t_store_user_s, params.t2_s);
        amplitude_damp(state, quantum::kControl, rec.t_store_server_s,
                       params.t1_s);
        phase_damp(state, quantum::kControl, rec.t_store_server_s, params.t2_s);

        if (role == Role::attacker) {
            // The genuine target never returns; a Haar-random qubit takes
            // its place.
            QuantumState control = state.marginal(quantum::kControl);
            state = control.tensor(quantum::haar_random_qubit(quantum::kTarget, rng));
        }

        const auto meas = quantum::verification_stage(state, rng, errors);
        transcript.outcomes.push_back(static_cast<std::uint8_t>(meas.outcome));
        transcript.s.push_back(meas.outcome == expected ? 1 : 0);
        transcript.losses.push_back(std::nullopt);
    }
    return transcript;
}

double r01(const Transcript& transcript) {
    if (transcript.s.empty())
        throw std::invalid_argument("r01: empty transcript");
    double sum = 0.0;
    for (auto b : transcript.s) sum += b;
    return sum / static_cast<double>(transcript.s.size());
}

double mu_lower_bound(int lambda) {
    if (lambda < 1) throw std::invalid_argument("mu_lower_bound: lambda >= 1");
    return 0.5 + 1.0 / std::sqrt(2.0 * lambda);
}

double chebyshev_bound(int lambda, double mu) {
    if (lambda < 1) throw std::invalid_argument("chebyshev_bound: lambda >= 1");
    if (!(mu > mu_lower_bound(lambda)))
        throw std::invalid_argument(
            "chebyshev_bound: mu at or below 1/2 + 1/sqrt(2 lambda)");
    const double dev = mu - 0.5;
    return 1.0 / (2.0 * lambda * dev * dev);
}

AcceptanceVerdict accept_condition_a(const Transcript& transcript, double mu) {
    if (!(mu > 0.5 && mu <= 1.0))
        throw std::invalid_argument("accept_condition_a: mu outside (1/2, 1]");
    AcceptanceVerdict verdict;
    verdict.r01 = r01(transcript);
    verdict.mu = mu;
    verdict.accepted = verdict.r01 >= mu;
    const int lambda = transcript.lambda();
    if (mu > mu_lower_bound(lambda))
        verdict.bound = chebyshev_bound(lambda, mu);
    return verdict;
}

}  // namespace qauth::auth
