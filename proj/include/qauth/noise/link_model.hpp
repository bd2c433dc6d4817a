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

// Closed-form physical-layer models: fiber transmission, dark counts,
// cavity-enhanced AFC storage-retrieval efficiency, and the per-shot
// survival probability composed from them.

#pragma once

#include <cstdint>

#include "qauth/noise/hardware_params.hpp"
#include "qauth/rng.hpp"

namespace qauth::noise {

enum class LossCause : std::uint8_t {
    fiber,
    detector,
    memory,
    dark_count_substitution,
};

struct LossEvent {
    LossCause cause = LossCause::fiber;
    int shot_index = 0;
};

// Single-photon fiber transmission probability 10^(-d*tau/10).
double transmission_prob(double distance_km, double tau_db_per_km);

// Dark-count probability over a capture window: 1 - exp(-t_w * f_dark).
double dark_count_prob(double t_window_s, double f_dark_hz);

// Storage-retrieval efficiency of the cavity-enhanced AFC memory for a
// storage time t. Values above 1 (possible for extreme mirror/absorption
// combinations, the formula is not intrinsically bounded) are clamped; the
// clamp is reported through *clamped when non-null.
double afc_efficiency(double storage_time_s, const HardwareParams& params,
                      bool* clamped = nullptr);

// Per-shot survival probability of a full authentication round trip:
// two fiber legs, a detection at each fiber exit, the user-side target
// memory, and the server-side control memory.
double shot_survival_prob(double distance_km, double t_store_user_s,
                          double t_store_server_s,
                          const HardwareParams& params);

// Bernoulli draw: true = the photon survives. p must be in [0,1].
bool sample_loss(double p_survive, Rng& rng);

}  // namespace qauth::noise
