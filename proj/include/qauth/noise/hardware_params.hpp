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

#pragma once

#include <limits>

namespace qauth::noise {

// Physical-layer constants of the simulated link, memories, and gates.
// Defaults are the calibration set the experiments are defined against.
// Only control-register single-qubit gate/readout errors are modeled; the
// calibration source provides no target-register values.
struct HardwareParams {
    // Fiber and detection.
    double tau_db_per_km = 0.17;       // fiber attenuation
    double velocity_m_per_s = 2.08e8;  // photon velocity in fiber
    double f_source_hz = 33.0e6;       // source repetition rate
    double f_dark_hz = 10.0;           // detector dark-count rate
    double t_window_s = 25.0e-9;       // detector capture window
    double p_detect = 0.95;            // detection efficiency

    // Qubit decoherence.
    double t1_s = 223.44e-6;  // relaxation time
    double t2_s = 295.35e-6;  // dephasing time

    // Cavity-enhanced AFC memory.
    double comb_finesse = 40.0;
    double alpha_l = 1.0;      // comb absorption depth
    double mirror_r1 = 0.96;
    double mirror_r2 = 0.99;
    double epsilon_hz = 3.0e3;  // comb FWHM linewidth
    double t_drive_store_s = 30.0e-9;
    double t_drive_recover_s = 30.0e-9;
    // When set, storage and retrieval are lossless and distortion-free
    // regardless of the comb parameters (used by the noiseless preset).
    bool ideal_memory = false;

    // Gate and readout error probabilities (control side).
    double err_gate_cx = 6.0e-3;
    double err_gate_czx = 6.4e-3;
    double err_hadamard_c = 1.48e-4;
    double err_readout_c = 2.16e-2;

    // All-zero-noise preset: unit transmission and detection, no dark
    // counts, ideal memory, infinite coherence times, exact gates.
    static HardwareParams noiseless() {
        HardwareParams p;
        p.tau_db_per_km = 0.0;
        p.f_dark_hz = 0.0;
        p.p_detect = 1.0;
        p.t1_s = std::numeric_limits<double>::infinity();
        p.t2_s = std::numeric_limits<double>::infinity();
        p.ideal_memory = true;
        p.err_gate_cx = 0.0;
        p.err_gate_czx = 0.0;
        p.err_hadamard_c = 0.0;
        p.err_readout_c = 0.0;
        return p;
    }

    // Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

}  // namespace qauth::noise
