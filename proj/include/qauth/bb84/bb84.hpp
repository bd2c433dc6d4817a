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

// BB84 key distribution with the authentication embeddings. AU qubits
// (entangled-pair halves prepared at the parties' initial meeting) hide at
// pre-shared positions inside the transmitted qubit stream; data slots carry
// ordinary BB84 states. Both slot kinds present the same maximally mixed
// marginal to anyone without the position key.
//
// Loss handling: a data slot whose photon is lost simply never clicks and
// drops out of sifting; a lost AU slot records a uniformly random outcome,
// as in the user-server protocol. Transmission and detection losses, gate
// errors, and readout errors apply; memory storage noise is not modeled for
// the embedding streams (the embedding has no per-photon storage timeline).

#pragma once

#include <cstdint>
#include <vector>

#include "qauth/auth/protocol.hpp"
#include "qauth/noise/hardware_params.hpp"
#include "qauth/rng.hpp"

namespace qauth::bb84 {

enum class Basis : std::uint8_t { z = 0, x = 1 };

// Pre-shared positions of the AU qubits within a stream.
struct PositionKey {
    std::vector<int> positions;  // sorted, distinct
    int stream_length = 0;

    static PositionKey random(int stream_length, int count, Rng& rng);
    void validate() const;
    int count() const { return static_cast<int>(positions.size()); }
};

struct Slot {
    bool is_au = false;
    std::uint8_t bit = 0;   // data slots only
    Basis basis = Basis::z; // data slots only
    int pair_index = -1;    // AU slots only
};

struct Bb84Stream {
    std::vector<Slot> slots;
};

// Lays out data qubits and AU slots at the key's positions.
Bb84Stream build_stream(const PositionKey& key, Rng& rng);

struct SiftResult {
    std::vector<std::uint8_t> alice_bits;
    std::vector<std::uint8_t> bob_bits;
    std::vector<int> matched_slots;
    double qber = 0.0;
    int sent_data_qubits = 0;
};

// One plain BB84 exchange over `stream_length` data qubits. The optional
// intercept-resend eavesdropper measures every qubit in a random basis and
// forwards the collapsed state.
SiftResult bb84_round(int stream_length, double distance_km,
                      const noise::HardwareParams& params, bool eavesdropper,
                      Rng& rng);

enum class Adversary {
    none,
    // Forger without the genuine AU qubits: AU slots arrive Haar-random.
    substitute_au,
    // Eavesdropper measuring and resending every transmitted qubit.
    intercept_resend,
    // Asymmetric scheme only: Bob's published outcome string is guessed.
    forge_bob,
};

struct SymmetricResult {
    auth::AcceptanceVerdict verdict_on_alice;  // Bob's check of S_A
    auth::AcceptanceVerdict verdict_on_bob;    // Alice's check of S_B
    auth::Transcript s_a;
    auth::Transcript s_b;
    SiftResult sift;
    bool proceeded = false;  // both verdicts accepted, QBER below threshold
};

// Symmetric embedding: Alice embeds lambda target AU qubits at K_ab inside
// her BB84 stream; Bob sends lambda control AU qubits back at K_ba inside a
// decoy stream. Both sides verify with the all-CX convention (expected
// outcome 0). The adversary, when present, acts on the Alice->Bob stream.
SymmetricResult symmetric_session(int lambda, const PositionKey& k_ab,
                                  const PositionKey& k_ba, double distance_km,
                                  const noise::HardwareParams& params,
                                  Adversary adversary, double mu, Rng& rng);

struct AsymmetricResult {
    auth::AcceptanceVerdict verdict_on_bob;    // Alice's check of F vs F'
    auth::AcceptanceVerdict verdict_on_alice;  // Bob's check of r0
    std::vector<std::uint8_t> f_prime;
    auth::Transcript half_outcomes;  // protocol-half rounds (expected 0)
    SiftResult sift;
    bool proceeded = false;
};

// Asymmetric embedding: Alice embeds 2*lambda targets at K; Bob verifies the
// first lambda pairs and publishes the outcomes F'; Alice accepts Bob when
// F' matches her key half at rate >= mu. Bob runs the half circuit on the
// remaining lambda pairs and accepts Alice when the rate of zeros >= mu.
AsymmetricResult asymmetric_session(int lambda, const PositionKey& k,
                                    const auth::GateChoiceKey& f,
                                    double distance_km,
                                    const noise::HardwareParams& params,
                                    Adversary adversary, double mu, Rng& rng);

// Abort threshold on the sifted-key error rate.
inline constexpr double kQberAbortThreshold = 0.11;

}  // namespace qauth::bb84
