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

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "qauth/kernels/kernels.hpp"

namespace qauth::quantum {

using cplx = std::complex<double>;

// Dense density matrix over one to three named qubit registers. Registers
// are addressed by label ('C', 'T', 'A', ...), never by position; the first
// label owns the most significant bit of the basis index, so a state with
// labels {C, T} stores |c t><c' t'| at row 2c+t, column 2c'+t'.
//
// States are values: operations that change the state act on a copy the
// caller owns. Storage is inline (no heap), so copies are cheap enough for
// per-shot use in Monte Carlo loops.
class QuantumState {
public:
    static constexpr int kMaxQubits = 3;
    static constexpr int kMaxDim = 1 << kMaxQubits;

    // |0...0><0...0| over the given registers.
    explicit QuantumState(std::span<const char> labels);
    QuantumState(std::initializer_list<char> labels)
        : QuantumState(std::span<const char>(labels.begin(), labels.size())) {}

    // Pure state from amplitudes (length must equal 2^labels.size()).
    static QuantumState pure(std::span<const char> labels,
                             std::span<const cplx> amplitudes);

    // I/2 on a single register.
    static QuantumState maximally_mixed(char label);

    int num_qubits() const { return num_qubits_; }
    int dim() const { return 1 << num_qubits_; }
    std::span<const char> labels() const { return {labels_.data(), static_cast<std::size_t>(num_qubits_)}; }
    bool has_register(char label) const;
    // Position of a register (0 = most significant). Throws if unknown.
    int position(char label) const;

    cplx at(int row, int col) const { return data_[row * dim() + col]; }
    cplx& at(int row, int col) { return data_[row * dim() + col]; }
    const cplx* data() const { return data_.data(); }
    cplx* data() { return data_.data(); }

    double trace_real() const;
    double purity() const;
    // max_ij |rho[i][j] - conj(rho[j][i])|
    double hermiticity_defect() const;
    // Smallest eigenvalue of the Hermitian part.
    double min_eigenvalue() const;
    // Throws std::runtime_error when Hermiticity, unit trace, or positive
    // semidefiniteness (within the given tolerances) is violated.
    void check_valid(double herm_tol = 1e-12, double trace_tol = 1e-12,
                     double psd_tol = 1e-10) const;

    // this (x) other; label sets must be disjoint.
    QuantumState tensor(const QuantumState& other) const;

    // Trace out one register (state must keep at least one).
    QuantumState partial_trace(char label) const;

    // Reduced single-qubit state of one register.
    QuantumState marginal(char label) const;

    void relabel(char from, char to);

    // Applies a unitary over the named target registers, given row-major and
    // indexed with targets[0] as the most significant bit. Dimension of u is
    // 2^targets.size() squared.
    void apply_unitary(std::span<const cplx> u, std::span<const char> targets);
    void apply_unitary(std::span<const cplx> u, std::initializer_list<char> t) {
        apply_unitary(u, std::span<const char>(t.begin(), t.size()));
    }

    // rho -> sum_i K_i rho K_i^dagger over the named targets. `kraus` holds
    // the operators back to back, each 2^targets.size() squared.
    void apply_kraus(std::span<const cplx> kraus, int num_ops,
                     std::span<const char> targets);

    // Probability that a computational-basis measurement of `label` gives 0.
    double prob_zero(char label) const;

    // Projects onto the given outcome for `label` and renormalizes; returns
    // the outcome probability. Throws when the probability is (numerically)
    // zero.
    double project(char label, int outcome);

private:
    QuantumState() = default;

    void embed(std::span<const cplx> u, std::span<const char> targets,
               cplx* out) const;

    int num_qubits_ = 0;
    std::array<char, kMaxQubits> labels_{};
    std::array<cplx, kMaxDim * kMaxDim> data_{};
};

// Eigenvalues of a Hermitian n-by-n matrix (cyclic Jacobi), ascending.
std::vector<double> hermitian_eigenvalues(int n, const cplx* matrix);

}  // namespace qauth::quantum
