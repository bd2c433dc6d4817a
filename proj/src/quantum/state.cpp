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

#include "qauth/quantum/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qauth::quantum {

namespace {

std::string label_str(char label) { return std::string(1, label); }

}  // namespace

QuantumState::QuantumState(std::span<const char> labels) {
    if (labels.empty() || labels.size() > kMaxQubits)
        throw std::invalid_argument("QuantumState: need 1 to 3 registers");
    num_qubits_ = static_cast<int>(labels.size());
    for (int i = 0; i < num_qubits_; ++i) {
        for (int j = 0; j < i; ++j)
            if (labels[j] == labels[i])
                throw std::invalid_argument("QuantumState: duplicate register " +
                                            label_str(labels[i]));
        labels_[i] = labels[i];
    }
    data_.fill(cplx{0.0, 0.0});
    data_[0] = cplx{1.0, 0.0};
}

QuantumState QuantumState::pure(std::span<const char> labels,
                                std::span<const cplx> amplitudes) {
    QuantumState state(labels);
    const int d = state.dim();
    if (static_cast<int>(amplitudes.size()) != d)
        throw std::invalid_argument("QuantumState::pure: amplitude length");
    double norm2 = 0.0;
    for (const cplx& a : amplitudes) norm2 += std::norm(a);
    if (norm2 <= 0.0)
        throw std::invalid_argument("QuantumState::pure: zero vector");
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            state.at(r, c) = amplitudes[r] * std::conj(amplitudes[c]) / norm2;
    return state;
}

QuantumState QuantumState::maximally_mixed(char label) {
    const char labels[1] = {label};
    QuantumState state{std::span<const char>(labels, 1)};
    state.at(0, 0) = cplx{0.5, 0.0};
    state.at(1, 1) = cplx{0.5, 0.0};
    return state;
}

bool QuantumState::has_register(char label) const {
    for (int i = 0; i < num_qubits_; ++i)
        if (labels_[i] == label) return true;
    return false;
}

int QuantumState::position(char label) const {
    for (int i = 0; i < num_qubits_; ++i)
        if (labels_[i] == label) return i;
    throw std::invalid_argument("QuantumState: unknown register " +
                                label_str(label));
}

double QuantumState::trace_real() const {
    double tr = 0.0;
    for (int i = 0; i < dim(); ++i) tr += at(i, i).real();
    return tr;
}

double QuantumState::purity() const {
    // Tr(rho^2) = sum_ij rho_ij conj(rho_ij) for Hermitian rho.
    double p = 0.0;
    const int d = dim();
    for (int i = 0; i < d * d; ++i) p += std::norm(data_[i]);
    return p;
}

double QuantumState::hermiticity_defect() const {
    double defect = 0.0;
    const int d = dim();
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            defect = std::max(defect, std::abs(at(r, c) - std::conj(at(c, r))));
    return defect;
}

double QuantumState::min_eigenvalue() const {
    return hermitian_eigenvalues(dim(), data()).front();
}

void QuantumState::check_valid(double herm_tol, double trace_tol,
                               double psd_tol) const {
    if (hermiticity_defect() > herm_tol)
        throw std::runtime_error("QuantumState: not Hermitian");
    if (std::abs(trace_real() - 1.0) > trace_tol)
        throw std::runtime_error("QuantumState: trace != 1");
    if (min_eigenvalue() < -psd_tol)
        throw std::runtime_error("QuantumState: negative eigenvalue");
}

QuantumState QuantumState::tensor(const QuantumState& other) const {
    if (num_qubits_ + other.num_qubits_ > kMaxQubits)
        throw std::invalid_argument("tensor: too many registers");
    QuantumState out;
    out.num_qubits_ = num_qubits_ + other.num_qubits_;
    for (int i = 0; i < num_qubits_; ++i) out.labels_[i] = labels_[i];
    for (int i = 0; i < other.num_qubits_; ++i) {
        if (has_register(other.labels_[i]))
            throw std::invalid_argument("tensor: duplicate register " +
                                        label_str(other.labels_[i]));
        out.labels_[num_qubits_ + i] = other.labels_[i];
    }
    const int da = dim();
    const int db = other.dim();
    for (int ra = 0; ra < da; ++ra)
        for (int ca = 0; ca < da; ++ca)
            for (int rb = 0; rb < db; ++rb)
                for (int cb = 0; cb < db; ++cb)
                    out.at(ra * db + rb, ca * db + cb) =
                        at(ra, ca) * other.at(rb, cb);
    return out;
}

QuantumState QuantumState::partial_trace(char label) const {
    if (num_qubits_ < 2)
        throw std::invalid_argument("partial_trace: cannot trace last register");
    const int pos = position(label);
    const int bit = num_qubits_ - 1 - pos;  // bit index within basis index
    const int mask = 1 << bit;
    const int low = mask - 1;

    QuantumState out;
    out.num_qubits_ = num_qubits_ - 1;
    int k = 0;
    for (int i = 0; i < num_qubits_; ++i)
        if (i != pos) out.labels_[k++] = labels_[i];

    const int dr = dim() / 2;
    auto expand = [&](int idx) {
        // Insert a zero at `bit` to lift a reduced index to a full index.
        return ((idx & ~low) << 1) | (idx & low);
    };
    for (int r = 0; r < dr; ++r) {
        const int fr = expand(r);
        for (int c = 0; c < dr; ++c) {
            const int fc = expand(c);
            out.at(r, c) = at(fr, fc) + at(fr | mask, fc | mask);
        }
    }
    return out;
}

QuantumState QuantumState::marginal(char label) const {
    QuantumState out = *this;
    while (out.num_qubits_ > 1) {
        const char victim =
            out.labels_[0] == label ? out.labels_[1] : out.labels_[0];
        out = out.partial_trace(victim);
    }
    out.position(label);  // validates the register existed
    return out;
}

void QuantumState::relabel(char from, char to) {
    const int pos = position(from);
    if (from != to && has_register(to))
        throw std::invalid_argument("relabel: register exists " + label_str(to));
    labels_[pos] = to;
}

void QuantumState::embed(std::span<const cplx> u,
                         std::span<const char> targets, cplx* out) const {
    const int t = static_cast<int>(targets.size());
    const int du = 1 << t;
    if (static_cast<int>(u.size()) != du * du)
        throw std::invalid_argument("apply_unitary: operator size");
    int bits[kMaxQubits];
    for (int i = 0; i < t; ++i)
        bits[i] = num_qubits_ - 1 - position(targets[i]);

    const int d = dim();
    int nontarget_mask = d - 1;
    for (int i = 0; i < t; ++i) nontarget_mask &= ~(1 << bits[i]);

    auto target_index = [&](int full) {
        int idx = 0;
        for (int i = 0; i < t; ++i)
            idx = (idx << 1) | ((full >> bits[i]) & 1);
        return idx;
    };
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) {
            if ((r & nontarget_mask) != (c & nontarget_mask)) {
                out[r * d + c] = cplx{0.0, 0.0};
            } else {
                out[r * d + c] = u[target_index(r) * du + target_index(c)];
            }
        }
    }
}

void QuantumState::apply_unitary(std::span<const cplx> u,
                                 std::span<const char> targets) {
    const int d = dim();
    std::array<cplx, kMaxDim * kMaxDim> full;
    std::array<cplx, kMaxDim * kMaxDim> scratch;
    std::array<cplx, kMaxDim * kMaxDim> result;
    if (static_cast<int>(targets.size()) == num_qubits_) {
        // Full-width operator: check the target order matches the register
        // order and skip the embedding.
        bool in_order = true;
        for (int i = 0; i < num_qubits_; ++i)
            in_order = in_order && targets[i] == labels_[i];
        if (in_order) {
            if (static_cast<int>(u.size()) != d * d)
                throw std::invalid_argument("apply_unitary: operator size");
            kernels::sandwich(d, u.data(), data(), result.data(),
                              scratch.data());
            std::copy(result.begin(), result.begin() + d * d, data_.begin());
            return;
        }
    }
    embed(u, targets, full.data());
    kernels::sandwich(d, full.data(), data(), result.data(), scratch.data());
    std::copy(result.begin(), result.begin() + d * d, data_.begin());
}

void QuantumState::apply_kraus(std::span<const cplx> kraus, int num_ops,
                               std::span<const char> targets) {
    const int t = static_cast<int>(targets.size());
    const int du = 1 << t;
    if (static_cast<int>(kraus.size()) != num_ops * du * du)
        throw std::invalid_argument("apply_kraus: operator sizes");
    const int d = dim();
    std::array<cplx, kMaxDim * kMaxDim> full;
    std::array<cplx, kMaxDim * kMaxDim> scratch;
    std::array<cplx, kMaxDim * kMaxDim> term;
    std::array<cplx, kMaxDim * kMaxDim> acc;
    acc.fill(cplx{0.0, 0.0});
    for (int op = 0; op < num_ops; ++op) {
        embed(kraus.subspan(static_cast<std::size_t>(op) * du * du, du * du),
              targets, full.data());
        kernels::sandwich(d, full.data(), data(), term.data(), scratch.data());
        for (int i = 0; i < d * d; ++i) acc[i] += term[i];
    }
    std::copy(acc.begin(), acc.begin() + d * d, data_.begin());
}

double QuantumState::prob_zero(char label) const {
    const int bit = num_qubits_ - 1 - position(label);
    const int mask = 1 << bit;
    double p = 0.0;
    for (int i = 0; i < dim(); ++i)
        if ((i & mask) == 0) p += at(i, i).real();
    return std::clamp(p, 0.0, 1.0);
}

double QuantumState::project(char label, int outcome) {
    if (outcome != 0 && outcome != 1)
        throw std::invalid_argument("project: outcome must be a bit");
    const int bit = num_qubits_ - 1 - position(label);
    const int mask = 1 << bit;
    const int want = outcome << bit;
    const int d = dim();
    double p = 0.0;
    for (int i = 0; i < d; ++i)
        if ((i & mask) == want) p += at(i, i).real();
    if (p <= 1e-300)
        throw std::runtime_error("project: zero-probability branch");
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            at(r, c) = ((r & mask) == want && (c & mask) == want)
                           ? at(r, c) / p
                           : cplx{0.0, 0.0};
    return p;
}

std::vector<double> hermitian_eigenvalues(int n, const cplx* matrix) {
    // Cyclic Jacobi with complex Givens rotations on the Hermitian part.
    std::vector<cplx> a(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            a[r * n + c] =
                0.5 * (matrix[r * n + c] + std::conj(matrix[c * n + r]));

    double scale = 0.0;
    for (const cplx& v : a) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return std::vector<double>(n, 0.0);

    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(a[p * n + q]);
        if (std::sqrt(off) < 1e-15 * scale * n) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a[p * n + q];
                const double mag = std::abs(apq);
                if (mag < 1e-18 * scale) continue;
                // Rotation U with U[p][p]=U[q][q]=c, U[p][q]=s*phase,
                // U[q][p]=-s*conj(phase); A <- U^dagger A U zeroes A[p][q].
                const cplx phase = apq / mag;
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double theta = 0.5 * std::atan2(2.0 * mag, aqq - app);
                const double c = std::cos(theta);
                const cplx s = std::sin(theta) * phase;
                for (int k = 0; k < n; ++k) {
                    const cplx akp = a[p * n + k];
                    const cplx akq = a[q * n + k];
                    a[p * n + k] = c * akp - s * akq;
                    a[q * n + k] = std::conj(s) * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx apk = a[k * n + p];
                    const cplx aqk = a[k * n + q];
                    a[k * n + p] = c * apk - std::conj(s) * aqk;
                    a[k * n + q] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a[i * n + i].real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

}  // namespace qauth::quantum
