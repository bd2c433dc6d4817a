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

// Local-time ledger for a session: emission, propagation, and storage
// durations of every photon. Photons are emitted at the source rate and
// returned in emission order, so earlier shots wait longer in the user
// memory; the server's control qubit stays stored for the partner's full
// round trip. This decreasing-storage structure is what makes early and
// late rounds statistically distinguishable downstream.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qauth/noise/link_model.hpp"

namespace qauth::timing {

struct PhotonRecord {
    int shot_index = 0;
    double t_emit_s = 0.0;          // leaves the server source
    double t_arrive_user_s = 0.0;   // captured into the user memory
    double t_store_user_s = 0.0;    // target storage duration (user side)
    double t_store_server_s = 0.0;  // control storage duration (server side)
    double t_return_s = 0.0;        // arrives back at the server
    std::optional<noise::LossEvent> loss;
};

struct SessionTiming {
    int lambda = 0;
    double t_wait_s = 0.0;
    double distance_km = 0.0;
    std::vector<PhotonRecord> records;
};

// Builds the ledger for lambda shots: shot i is emitted at i/f_source,
// stored at the user until all shots arrived plus the wait time T, and
// returned first-in-first-out.
SessionTiming build_schedule(int lambda, double t_wait_s, double distance_km,
                             const noise::HardwareParams& params);

// (t_store_user, t_store_server) per shot, in shot order.
std::vector<std::pair<double, double>> storage_times(
    const SessionTiming& timing);

}  // namespace qauth::timing
