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

// CPTP noise channels. Calibration semantics:
//   amplitude damping  gamma  = 1 - exp(-t/T1),
//   phase damping      lambda = 1 - exp(-t/T2); the off-diagonal multiplier
//   is exp(-t/T2), realized as a phase flip with probability lambda/2.
// Depolarizing mixes the targeted registers toward the maximally mixed
// state with weight p. Readout flips act on classical bits, not on states.

#pragma once

#include "qauth/quantum/state.hpp"
#include "qauth/rng.hpp"

namespace qauth::quantum {

// rho -> (1-p) rho + p * (I/d_t (x) Tr_targets rho), p in [0,1].
void depolarize(QuantumState& state, std::span<const char> targets, double p);
inline void depolarize(QuantumState& state, std::initializer_list<char> t,
                       double p) {
    depolarize(state, std::span<const char>(t.begin(), t.size()), p);
}

// Amplitude damping of one register for duration t given relaxation time t1.
void amplitude_damp(QuantumState& state, char target, double t, double t1);

// Phase damping of one register for duration t given dephasing time t2.
void phase_damp(QuantumState& state, char target, double t, double t2);

// Classical readout error: flips the bit with probability p.
int flip_readout(int bit, double p, Rng& rng);

}  // namespace qauth::quantum
