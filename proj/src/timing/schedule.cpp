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

#include "qauth/timing/schedule.hpp"

#include <stdexcept>

namespace qauth::timing {

SessionTiming build_schedule(int lambda, double t_wait_s, double distance_km,
                             const noise::HardwareParams& params) {
    if (lambda < 1) throw std::invalid_argument("build_schedule: lambda >= 1");
    if (t_wait_s < 0.0)
        throw std::invalid_argument("build_schedule: negative wait time");
    if (distance_km < 0.0)
        throw std::invalid_argument("build_schedule: negative distance");
    params.validate();

    const double dt = 1.0 / params.f_source_hz;
    const double flight = distance_km * 1e3 / params.velocity_m_per_s;

    SessionTiming timing;
    timing.lambda = lambda;
    timing.t_wait_s = t_wait_s;
    timing.distance_km = distance_km;
    timing.records.reserve(lambda);
    for (int i = 0; i < lambda; ++i) {
        PhotonRecord rec;
        rec.shot_index = i;
        rec.t_emit_s = i * dt;
        rec.t_arrive_user_s = rec.t_emit_s + flight + params.t_drive_store_s;
        // Shot i waits for the remaining lambda-1-i emissions, the session
        // wait T, and its own driven recovery.
        rec.t_store_user_s =
            (lambda - 1 - i) * dt + t_wait_s + params.t_drive_recover_s;
        rec.t_store_server_s = rec.t_store_user_s + 2.0 * flight +
                               params.t_drive_store_s +
                               params.t_drive_recover_s;
        rec.t_return_s = rec.t_arrive_user_s + rec.t_store_user_s + flight;
        timing.records.push_back(rec);
    }
    return timing;
}

std::vector<std::pair<double, double>> storage_times(
    const SessionTiming& timing) {
    std::vector<std::pair<double, double>> out;
    out.reserve(timing.records.size());
    for (const auto& rec : timing.records)
        out.emplace_back(rec.t_store_user_s, rec.t_store_server_s);
    return out;
}

}  // namespace qauth::timing
