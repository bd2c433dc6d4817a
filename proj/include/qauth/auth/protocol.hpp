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

// The lambda-round user-server authentication session: per shot, a pair is
// generated with a key-selected CX/CZX gate, the target travels to the user
// and back under the link loss model, both halves decohere for their
// storage durations, and the control is verified. A shot whose photon is
// lost anywhere records a uniformly random outcome (dark counts stand in
// for the missing click); a configuration switch discards such shots
// instead. Forgeries replace the returned target with a Haar-random state.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qauth/quantum/circuits.hpp"
#include "qauth/timing/schedule.hpp"

namespace qauth::auth {

struct GateChoiceKey {
    std::vector<std::uint8_t> bits;

    static GateChoiceKey random(int lambda, Rng& rng);
    // All-CX key used by the symmetric embedding.
    static GateChoiceKey all_cx(int lambda);
    int lambda() const { return static_cast<int>(bits.size()); }
};

enum class Role { legitimate, attacker };

// What to do with shots whose photon never produced a genuine click.
enum class LossPolicy { substitute_random, discard };

struct Transcript {
    // s[i] = 1 when outcomes[i] equals the expected bit for round i.
    std::vector<std::uint8_t> s;
    std::vector<std::uint8_t> outcomes;
    std::vector<std::optional<noise::LossEvent>> losses;
    Role role = Role::legitimate;

    int lambda() const { return static_cast<int>(s.size()); }
};

struct AcceptanceVerdict {
    double r01 = 0.0;
    double mu = 0.0;
    bool accepted = false;
    // Chebyshev forgery bound; absent when mu is at or below the threshold
    // that makes the bound vacuous.
    std::optional<double> bound;
};

// Runs one lambda-round session. The key length must equal timing.lambda.
Transcript run_session(const GateChoiceKey& key,
                       const timing::SessionTiming& timing,
                       const noise::HardwareParams& params, Role role,
                       Rng& rng,
                       LossPolicy loss_policy = LossPolicy::substitute_random);

// Fraction of matching rounds. Throws on an empty transcript.
double r01(const Transcript& transcript);

// Smallest threshold that makes the Chebyshev bound meaningful:
// 1/2 + 1/sqrt(2 lambda).
double mu_lower_bound(int lambda);

// Forgery acceptance bound 1 / (2 lambda (mu - 1/2)^2); requires
// mu > mu_lower_bound(lambda).
double chebyshev_bound(int lambda, double mu);

// Acceptance condition a): accept when r01 >= mu, mu in (1/2, 1].
AcceptanceVerdict accept_condition_a(const Transcript& transcript, double mu);

}  // namespace qauth::auth
