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

#include "qauth/noise/link_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qauth::noise {

void HardwareParams::validate() const {
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (tau_db_per_km < 0.0)
        throw std::invalid_argument("hardware: tau must be >= 0");
    if (!(velocity_m_per_s > 0.0))
        throw std::invalid_argument("hardware: fiber velocity must be > 0");
    if (!(f_source_hz > 0.0))
        throw std::invalid_argument("hardware: source frequency must be > 0");
    if (f_dark_hz < 0.0)
        throw std::invalid_argument("hardware: dark-count rate must be >= 0");
    if (t_window_s < 0.0)
        throw std::invalid_argument("hardware: capture window must be >= 0");
    if (!in_unit(p_detect))
        throw std::invalid_argument("hardware: p_detect outside [0,1]");
    if (!(t1_s > 0.0) || !(t2_s > 0.0))
        throw std::invalid_argument("hardware: T1 and T2 must be > 0");
    if (!(comb_finesse >= 1.0))
        throw std::invalid_argument("hardware: comb finesse must be >= 1");
    if (alpha_l < 0.0)
        throw std::invalid_argument("hardware: alpha*l must be >= 0");
    if (!in_unit(mirror_r1) || !in_unit(mirror_r2))
        throw std::invalid_argument("hardware: reflectivity outside [0,1]");
    if (epsilon_hz < 0.0)
        throw std::invalid_argument("hardware: comb linewidth must be >= 0");
    if (t_drive_store_s < 0.0 || t_drive_recover_s < 0.0)
        throw std::invalid_argument("hardware: drive times must be >= 0");
    if (!in_unit(err_gate_cx) || !in_unit(err_gate_czx) ||
        !in_unit(err_hadamard_c) || !in_unit(err_readout_c))
        throw std::invalid_argument("hardware: error rate outside [0,1]");
    if (!ideal_memory && mirror_r1 * mirror_r2 >= 1.0 && alpha_l == 0.0)
        throw std::invalid_argument("hardware: degenerate cavity denominator");
}

double transmission_prob(double distance_km, double tau_db_per_km) {
    if (distance_km < 0.0)
        throw std::invalid_argument("transmission_prob: negative distance");
    if (tau_db_per_km < 0.0)
        throw std::invalid_argument("transmission_prob: negative attenuation");
    return std::pow(10.0, -distance_km * tau_db_per_km / 10.0);
}

double dark_count_prob(double t_window_s, double f_dark_hz) {
    if (t_window_s < 0.0)
        throw std::invalid_argument("dark_count_prob: negative window");
    if (f_dark_hz < 0.0)
        throw std::invalid_argument("dark_count_prob: negative rate");
    return -std::expm1(-t_window_s * f_dark_hz);
}

double afc_efficiency(double storage_time_s, const HardwareParams& params,
                      bool* clamped) {
    if (clamped != nullptr) *clamped = false;
    if (storage_time_s < 0.0)
        throw std::invalid_argument("afc_efficiency: negative storage time");
    if (params.ideal_memory) return 1.0;
    if (!(params.comb_finesse > 0.0))
        throw std::invalid_argument("afc_efficiency: comb finesse must be > 0");

    const double abar_l = params.alpha_l / params.comb_finesse *
                          std::sqrt(std::numbers::pi / (4.0 * std::numbers::ln2));
    const double ebar = 2.0 * std::numbers::pi * params.epsilon_hz /
                        std::sqrt(8.0 * std::numbers::ln2);
    const double root =
        1.0 - std::sqrt(params.mirror_r1 * params.mirror_r2) * std::exp(-abar_l);
    if (root <= 0.0)
        throw std::invalid_argument("afc_efficiency: degenerate denominator");

    const double gauss = std::exp(-storage_time_s * storage_time_s * ebar * ebar);
    const double numerator = 4.0 * abar_l * abar_l * std::exp(-2.0 * abar_l) *
                             (1.0 - params.mirror_r1) * (1.0 - params.mirror_r1) *
                             params.mirror_r2 * gauss;
    const double eta = numerator / (root * root * root * root);
    if (eta > 1.0) {
        if (clamped != nullptr) *clamped = true;
        return 1.0;
    }
    return eta;
}

double shot_survival_prob(double distance_km, double t_store_user_s,
                          double t_store_server_s,
                          const HardwareParams& params) {
    if (t_store_user_s < 0.0 || t_store_server_s < 0.0)
        throw std::invalid_argument("shot_survival_prob: negative storage time");
    const double leg = transmission_prob(distance_km, params.tau_db_per_km);
    return leg * leg * params.p_detect * params.p_detect *
           afc_efficiency(t_store_user_s, params) *
           afc_efficiency(t_store_server_s, params);
}

bool sample_loss(double p_survive, Rng& rng) {
    if (!(p_survive >= 0.0 && p_survive <= 1.0))
        throw std::invalid_argument("sample_loss: probability outside [0,1]");
    return rng.bernoulli(p_survive);
}

}  // namespace qauth::noise
