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

#include "qauth/bb84/bb84.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "qauth/noise/link_model.hpp"
#include "qauth/quantum/channels.hpp"
#include "qauth/quantum/gates.hpp"

namespace qauth::bb84 {

using quantum::GateChoice;
using quantum::GateErrors;
using quantum::QuantumState;

namespace {

constexpr char kQ = 'Q';

QuantumState encode_data_qubit(int bit, Basis basis) {
    QuantumState state{kQ};
    if (bit == 1) state.apply_unitary(quantum::kPauliX, {kQ});
    if (basis == Basis::x) state.apply_unitary(quantum::kHadamard, {kQ});
    return state;
}

// Measures `label` in the given basis; the post state is re-expressed in
// the original frame so it can be forwarded.
int measure_in_basis(QuantumState& state, char label, Basis basis, Rng& rng) {
    const char labels[1] = {label};
    if (basis == Basis::x)
        state.apply_unitary(quantum::kHadamard,
                            std::span<const char>(labels, 1));
    const double p0 = state.prob_zero(label);
    const int outcome = rng.uniform() < p0 ? 0 : 1;
    state.project(label, outcome);
    if (basis == Basis::x)
        state.apply_unitary(quantum::kHadamard,
                            std::span<const char>(labels, 1));
    return outcome;
}

Basis random_basis(Rng& rng) { return rng.bit() ? Basis::x : Basis::z; }

GateErrors gate_errors(const noise::HardwareParams& params) {
    return {params.err_hadamard_c, params.err_gate_cx, params.err_gate_czx,
            params.err_readout_c};
}

double slot_survival(double distance_km, const noise::HardwareParams& params) {
    return noise::transmission_prob(distance_km, params.tau_db_per_km) *
           params.p_detect;
}

auth::Transcript make_transcript(std::vector<std::uint8_t> s,
                                 std::vector<std::uint8_t> outcomes,
                                 std::vector<std::optional<noise::LossEvent>> losses,
                                 auth::Role role) {
    auth::Transcript t;
    t.s = std::move(s);
    t.outcomes = std::move(outcomes);
    t.losses = std::move(losses);
    t.role = role;
    return t;
}

}  // namespace

PositionKey PositionKey::random(int stream_length, int count, Rng& rng) {
    if (count < 1 || count > stream_length)
        throw std::invalid_argument("PositionKey: count outside [1, length]");
    // Floyd's sampling of `count` distinct slots.
    std::unordered_set<int> chosen;
    for (int i = stream_length - count; i < stream_length; ++i) {
        const int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        if (!chosen.insert(j).second) chosen.insert(i);
    }
    PositionKey key;
    key.stream_length = stream_length;
    key.positions.assign(chosen.begin(), chosen.end());
    std::sort(key.positions.begin(), key.positions.end());
    return key;
}

void PositionKey::validate() const {
    if (stream_length < 1)
        throw std::invalid_argument("PositionKey: empty stream");
    int prev = -1;
    for (int p : positions) {
        if (p < 0 || p >= stream_length)
            throw std::invalid_argument("PositionKey: position out of range");
        if (p <= prev)
            throw std::invalid_argument("PositionKey: positions not distinct");
        prev = p;
    }
}

Bb84Stream build_stream(const PositionKey& key, Rng& rng) {
    key.validate();
    Bb84Stream stream;
    stream.slots.resize(key.stream_length);
    int pair = 0;
    std::size_t next_au = 0;
    for (int i = 0; i < key.stream_length; ++i) {
        Slot& slot = stream.slots[i];
        if (next_au < key.positions.size() && key.positions[next_au] == i) {
            slot.is_au = true;
            slot.pair_index = pair++;
            ++next_au;
        } else {
            slot.is_au = false;
            slot.bit = static_cast<std::uint8_t>(rng.bit());
            slot.basis = random_basis(rng);
        }
    }
    return stream;
}

SiftResult bb84_round(int stream_length, double distance_km,
                      const noise::HardwareParams& params, bool eavesdropper,
                      Rng& rng) {
    if (stream_length < 2)
        throw std::invalid_argument("bb84_round: stream_length >= 2");
    params.validate();

    SiftResult result;
    result.sent_data_qubits = stream_length;
    const double p_survive = slot_survival(distance_km, params);

    int errors = 0;
    for (int i = 0; i < stream_length; ++i) {
        const int bit = rng.bit();
        const Basis alice_basis = random_basis(rng);
        QuantumState qubit = encode_data_qubit(bit, alice_basis);

        if (eavesdropper)
            measure_in_basis(qubit, kQ, random_basis(rng), rng);

        if (!noise::sample_loss(p_survive, rng)) continue;  // no click

        const Basis bob_basis = random_basis(rng);
        const int bob_bit = measure_in_basis(qubit, kQ, bob_basis, rng);
        if (bob_basis != alice_basis) continue;

        result.alice_bits.push_back(static_cast<std::uint8_t>(bit));
        result.bob_bits.push_back(static_cast<std::uint8_t>(bob_bit));
        result.matched_slots.push_back(i);
        if (bob_bit != bit) ++errors;
    }
    result.qber = result.alice_bits.empty()
                      ? 0.0
                      : static_cast<double>(errors) /
                            static_cast<double>(result.alice_bits.size());
    return result;
}

namespace {

// Shared AU-slot transmission: returns the CT state after the target
// crossed one fiber leg, or nothing when the photon was lost.
struct AuArrival {
    bool lost = false;
    QuantumState state{quantum::kControl, quantum::kTarget};
};

AuArrival transmit_au_pair(GateChoice m, double distance_km,
                           const noise::HardwareParams& params,
                           Adversary adversary, int shot, Rng& rng) {
    AuArrival arrival;
    arrival.state = quantum::generation_stage(m, gate_errors(params));

    if (adversary == Adversary::substitute_au) {
        QuantumState control = arrival.state.marginal(quantum::kControl);
        arrival.state =
            control.tensor(quantum::haar_random_qubit(quantum::kTarget, rng));
    } else if (adversary == Adversary::intercept_resend) {
        measure_in_basis(arrival.state, quantum::kTarget, random_basis(rng),
                         rng);
    }

    if (!noise::sample_loss(slot_survival(distance_km, params), rng)) {
        arrival.lost = true;
        (void)shot;
    }
    return arrival;
}

}  // namespace

SymmetricResult symmetric_session(int lambda, const PositionKey& k_ab,
                                  const PositionKey& k_ba, double distance_km,
                                  const noise::HardwareParams& params,
                                  Adversary adversary, double mu, Rng& rng) {
    if (lambda < 1) throw std::invalid_argument("symmetric_session: lambda");
    if (k_ab.count() != lambda || k_ba.count() != lambda)
        throw std::invalid_argument(
            "symmetric_session: position keys must carry lambda slots");
    if (adversary == Adversary::forge_bob)
        throw std::invalid_argument(
            "symmetric_session: forge_bob applies to the asymmetric scheme");
    params.validate();
    const GateErrors errors = gate_errors(params);

    SymmetricResult result;

    // Alice -> Bob: data slots plus Alice's target AU qubits at K_ab. Bob
    // extracts the AU pairs and verifies with his stored controls.
    {
        const Bb84Stream stream = build_stream(k_ab, rng);
        std::vector<std::uint8_t> s, outcomes;
        std::vector<std::optional<noise::LossEvent>> losses;
        int qber_errors = 0;
        const double p_survive = slot_survival(distance_km, params);

        for (int i = 0; i < k_ab.stream_length; ++i) {
            const Slot& slot = stream.slots[i];
            if (slot.is_au) {
                AuArrival arrival = transmit_au_pair(
                    GateChoice::cx, distance_km, params, adversary,
                    slot.pair_index, rng);
                if (arrival.lost) {
                    const int outcome = rng.bit();
                    outcomes.push_back(static_cast<std::uint8_t>(outcome));
                    s.push_back(outcome == 0 ? 1 : 0);
                    losses.push_back(noise::LossEvent{
                        noise::LossCause::dark_count_substitution,
                        slot.pair_index});
                } else {
                    const auto meas =
                        quantum::verification_stage(arrival.state, rng, errors);
                    outcomes.push_back(static_cast<std::uint8_t>(meas.outcome));
                    s.push_back(meas.outcome == 0 ? 1 : 0);
                    losses.push_back(std::nullopt);
                }
                continue;
            }

            // Data slot.
            QuantumState qubit = encode_data_qubit(slot.bit, slot.basis);
            if (adversary == Adversary::intercept_resend)
                measure_in_basis(qubit, kQ, random_basis(rng), rng);
            if (!noise::sample_loss(p_survive, rng)) continue;
            const Basis bob_basis = random_basis(rng);
            const int bob_bit = measure_in_basis(qubit, kQ, bob_basis, rng);
            if (bob_basis != slot.basis) continue;
            result.sift.alice_bits.push_back(slot.bit);
            result.sift.bob_bits.push_back(static_cast<std::uint8_t>(bob_bit));
            result.sift.matched_slots.push_back(i);
            if (bob_bit != slot.bit) ++qber_errors;
        }
        result.sift.sent_data_qubits = k_ab.stream_length - lambda;
        result.sift.qber = result.sift.alice_bits.empty()
                               ? 0.0
                               : static_cast<double>(qber_errors) /
                                     static_cast<double>(
                                         result.sift.alice_bits.size());
        result.s_a = make_transcript(std::move(s), std::move(outcomes),
                                     std::move(losses),
                                     adversary == Adversary::none
                                         ? auth::Role::legitimate
                                         : auth::Role::attacker);
        result.verdict_on_alice = auth::accept_condition_a(result.s_a, mu);
    }

    // Bob -> Alice: Bob's control AU qubits at K_ba among decoy data slots;
    // Alice verifies them against her stored targets. The adversary does not
    // act on this leg.
    {
        const Bb84Stream stream = build_stream(k_ba, rng);
        std::vector<std::uint8_t> s, outcomes;
        std::vector<std::optional<noise::LossEvent>> losses;
        for (const Slot& slot : stream.slots) {
            if (!slot.is_au) continue;  // decoys are discarded on arrival
            AuArrival arrival =
                transmit_au_pair(GateChoice::cx, distance_km, params,
                                 Adversary::none, slot.pair_index, rng);
            if (arrival.lost) {
                const int outcome = rng.bit();
                outcomes.push_back(static_cast<std::uint8_t>(outcome));
                s.push_back(outcome == 0 ? 1 : 0);
                losses.push_back(noise::LossEvent{
                    noise::LossCause::dark_count_substitution,
                    slot.pair_index});
            } else {
                const auto meas =
                    quantum::verification_stage(arrival.state, rng, errors);
                outcomes.push_back(static_cast<std::uint8_t>(meas.outcome));
                s.push_back(meas.outcome == 0 ? 1 : 0);
                losses.push_back(std::nullopt);
            }
        }
        result.s_b = make_transcript(std::move(s), std::move(outcomes),
                                     std::move(losses),
                                     auth::Role::legitimate);
        result.verdict_on_bob = auth::accept_condition_a(result.s_b, mu);
    }

    result.proceeded = result.verdict_on_alice.accepted &&
                       result.verdict_on_bob.accepted &&
                       result.sift.qber <= kQberAbortThreshold;
    return result;
}

AsymmetricResult asymmetric_session(int lambda, const PositionKey& k,
                                    const auth::GateChoiceKey& f,
                                    double distance_km,
                                    const noise::HardwareParams& params,
                                    Adversary adversary, double mu, Rng& rng) {
    if (lambda < 1) throw std::invalid_argument("asymmetric_session: lambda");
    if (k.count() != 2 * lambda)
        throw std::invalid_argument(
            "asymmetric_session: position key must carry 2*lambda slots");
    if (f.lambda() != 2 * lambda)
        throw std::invalid_argument(
            "asymmetric_session: gate key must carry 2*lambda bits");
    params.validate();
    const GateErrors errors = gate_errors(params);

    AsymmetricResult result;
    const Bb84Stream stream = build_stream(k, rng);
    const double p_survive = slot_survival(distance_km, params);

    // Arrived AU pairs in pair order; lost ones are flagged.
    std::vector<std::optional<QuantumState>> pairs(2 * lambda);
    int qber_errors = 0;
    for (int i = 0; i < k.stream_length; ++i) {
        const Slot& slot = stream.slots[i];
        if (slot.is_au) {
            AuArrival arrival = transmit_au_pair(
                quantum::gate_choice_from_bit(f.bits[slot.pair_index]),
                distance_km,
                params, adversary == Adversary::substitute_au
                            ? Adversary::substitute_au
                            : (adversary == Adversary::intercept_resend
                                   ? Adversary::intercept_resend
                                   : Adversary::none),
                slot.pair_index, rng);
            if (!arrival.lost) pairs[slot.pair_index] = std::move(arrival.state);
            continue;
        }
        QuantumState qubit = encode_data_qubit(slot.bit, slot.basis);
        if (adversary == Adversary::intercept_resend)
            measure_in_basis(qubit, kQ, random_basis(rng), rng);
        if (!noise::sample_loss(p_survive, rng)) continue;
        const Basis bob_basis = random_basis(rng);
        const int bob_bit = measure_in_basis(qubit, kQ, bob_basis, rng);
        if (bob_basis != slot.basis) continue;
        result.sift.alice_bits.push_back(slot.bit);
        result.sift.bob_bits.push_back(static_cast<std::uint8_t>(bob_bit));
        result.sift.matched_slots.push_back(i);
        if (bob_bit != slot.bit) ++qber_errors;
    }
    result.sift.sent_data_qubits = k.stream_length - 2 * lambda;
    result.sift.qber =
        result.sift.alice_bits.empty()
            ? 0.0
            : static_cast<double>(qber_errors) /
                  static_cast<double>(result.sift.alice_bits.size());

    // First half: Bob verifies and publishes the raw outcomes F'.
    result.f_prime.resize(lambda);
    {
        std::vector<std::uint8_t> s(lambda), outcomes(lambda);
        std::vector<std::optional<noise::LossEvent>> losses(lambda);
        for (int i = 0; i < lambda; ++i) {
            int outcome;
            if (adversary == Adversary::forge_bob) {
                // Without Bob's stored controls, the published bits are
                // guesses.
                outcome = rng.bit();
            } else if (!pairs[i].has_value()) {
                outcome = rng.bit();
                losses[i] = noise::LossEvent{
                    noise::LossCause::dark_count_substitution, i};
            } else {
                outcome =
                    quantum::verification_stage(*pairs[i], rng, errors).outcome;
            }
            result.f_prime[i] = static_cast<std::uint8_t>(outcome);
            outcomes[i] = static_cast<std::uint8_t>(outcome);
            s[i] = outcome == f.bits[i] ? 1 : 0;
        }
        const auto transcript = make_transcript(
            std::move(s), std::move(outcomes), std::move(losses),
            adversary == Adversary::none ? auth::Role::legitimate
                                         : auth::Role::attacker);
        result.verdict_on_bob = auth::accept_condition_a(transcript, mu);
    }

    // Second half: the protocol-half circuit; Bob accepts Alice when the
    // rate of zeros clears mu.
    {
        std::vector<std::uint8_t> s(lambda), outcomes(lambda);
        std::vector<std::optional<noise::LossEvent>> losses(lambda);
        for (int i = 0; i < lambda; ++i) {
            const int pair_index = lambda + i;
            int outcome;
            if (!pairs[pair_index].has_value()) {
                outcome = rng.bit();
                losses[i] = noise::LossEvent{
                    noise::LossCause::dark_count_substitution, pair_index};
            } else if (adversary == Adversary::forge_bob) {
                // A forged Bob lacks the stored control halves.
                QuantumState target =
                    pairs[pair_index]->marginal(quantum::kTarget);
                QuantumState state =
                    quantum::haar_random_qubit(quantum::kControl, rng)
                        .tensor(target);
                outcome =
                    quantum::protocol_half_stage(state, rng, errors).outcome;
            } else {
                outcome =
                    quantum::protocol_half_stage(*pairs[pair_index], rng, errors)
                        .outcome;
            }
            outcomes[i] = static_cast<std::uint8_t>(outcome);
            s[i] = outcome == 0 ? 1 : 0;
        }
        result.half_outcomes = make_transcript(
            std::move(s), std::move(outcomes), std::move(losses),
            adversary == Adversary::substitute_au ? auth::Role::attacker
                                                  : auth::Role::legitimate);
        result.verdict_on_alice =
            auth::accept_condition_a(result.half_outcomes, mu);
    }

    result.proceeded = result.verdict_on_bob.accepted &&
                       result.verdict_on_alice.accepted &&
                       result.sift.qber <= kQberAbortThreshold;
    return result;
}

}  // namespace qauth::bb84
