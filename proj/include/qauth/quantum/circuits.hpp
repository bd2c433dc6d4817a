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

// The two-stage authentication circuit and its variants, over registers
// C (control, kept by the server) and T (target, handed to the user).
//
// Generation prepares (|00> + (-1)^m |11>)/sqrt(2) by a Hadamard on C
// followed by a controlled X (m=0) or controlled ZX (m=1) on T.
// Verification applies X on T anti-controlled on C, a Hadamard on C, and
// measures C; a genuine pair yields outcome m with certainty. The half
// circuit applies X on C controlled on T and measures C; a genuine pair
// yields 0 with certainty, leaving T in |+> (m=0) or |-> (m=1).

#pragma once

#include "qauth/quantum/state.hpp"
#include "qauth/rng.hpp"

namespace qauth::quantum {

inline constexpr char kControl = 'C';
inline constexpr char kTarget = 'T';
inline constexpr char kAttacker = 'A';

// Generation-stage gate choice: the bit m selects CX (0) or CZX (1).
enum class GateChoice : int { cx = 0, czx = 1 };

inline GateChoice gate_choice_from_bit(int m) {
    if (m != 0 && m != 1)
        throw std::invalid_argument("gate choice bit must be 0 or 1");
    return static_cast<GateChoice>(m);
}

// Gate/readout error probabilities applied around the ideal circuit:
// a depolarizing channel on C after each Hadamard, a two-qubit depolarizing
// channel on CT after the controlled gate, and a classical readout flip.
struct GateErrors {
    double hadamard_c = 0.0;
    double gate_cx = 0.0;
    double gate_czx = 0.0;
    double readout_c = 0.0;
};

struct MeasurementResult {
    int outcome = 0;
    double probability = 1.0;
    QuantumState post_state;
};

// Two-qubit CT state after the generation stage.
QuantumState generation_stage(GateChoice m, const GateErrors& errors = {});

// Verification stage on a CT state; samples the C measurement.
MeasurementResult verification_stage(const QuantumState& state, Rng& rng,
                                     const GateErrors& errors = {});

// Probability that the verification measurement yields 0 (no sampling).
double verification_prob_zero(const QuantumState& state,
                              const GateErrors& errors = {});

// Half circuit of the asymmetric scheme on a CT state; samples C.
MeasurementResult protocol_half_stage(const QuantumState& state, Rng& rng,
                                      const GateErrors& errors = {});

double protocol_half_prob_zero(const QuantumState& state);

// Tampering model: the generated CT pair is joined with an attacker qubit A
// and evolved by an arbitrary unitary on T(x)A; the target register is then
// traced out (it never comes back). Returns the CA state. g_ta is 4x4 over
// (T, A) and must be unitary within 1e-10.
QuantumState tamper_oracle(GateChoice m, std::span<const cplx> g_ta,
                           const QuantumState& rho_a);

// Haar-distributed single-qubit pure state.
QuantumState haar_random_qubit(char label, Rng& rng);

// Haar-distributed unitary (Ginibre ensemble + Gram-Schmidt with the
// phase convention fixed by positive diagonal R).
std::vector<cplx> haar_random_unitary(int dim, Rng& rng);

}  // namespace qauth::quantum
