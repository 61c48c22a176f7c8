// Copyright 2026 The cskit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cskit/fock.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cskit/beamsplitter.h"
#include "cskit/errors.h"

namespace cskit {

namespace {

double squared_norm(std::span<const Complex> amps) {
    double total = 0.0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return total;
}

std::size_t product_of_dims(std::span<const int> cutoffs) {
    std::size_t total = 1;
    for (int c : cutoffs) {
        total *= static_cast<std::size_t>(c) + 1;
    }
    return total;
}

void require_mode(const MultiModeState &state, std::size_t mode) {
    if (mode >= state.num_modes()) {
        throw InputError("mode " + std::to_string(mode) + " out of range for a " +
                         std::to_string(state.num_modes()) + "-mode state");
    }
}

double clamp_unit(double f) {
    return std::clamp(f, 0.0, 1.0);
}

}  // namespace

FockVector::FockVector(std::vector<Complex> amps, double leakage) : amps_(std::move(amps)), leakage_(leakage) {
    if (amps_.empty()) {
        throw InputError("FockVector needs at least one amplitude");
    }
    for (const auto &a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw InputError("FockVector amplitude is not finite");
        }
    }
}

double FockVector::norm() const {
    return std::sqrt(squared_norm(amps_));
}

FockVector FockVector::normalized() const {
    double n = norm();
    if (n == 0.0) {
        throw InputError("cannot normalize a zero FockVector");
    }
    std::vector<Complex> out(amps_);
    for (auto &a : out) {
        a /= n;
    }
    return FockVector(std::move(out), leakage_);
}

FockVector coherent_state(Complex alpha, int cutoff) {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
        throw InputError("coherent_state: alpha is not finite");
    }
    if (cutoff < 1) {
        throw InputError("coherent_state: cutoff must be >= 1");
    }
    double mean = std::norm(alpha);
    if (mean > (cutoff / 3.0) * (1.0 + 1e-12)) {
        throw TruncationError("coherent_state: |alpha|^2 = " + std::to_string(mean) + " exceeds cutoff/3 for cutoff " +
                              std::to_string(cutoff));
    }
    std::vector<Complex> amps(static_cast<std::size_t>(cutoff) + 1);
    amps[0] = std::exp(-mean / 2.0);
    for (int n = 1; n <= cutoff; ++n) {
        amps[n] = amps[n - 1] * alpha / std::sqrt(static_cast<double>(n));
    }
    double kept = squared_norm(amps);
    double leakage = std::max(0.0, 1.0 - kept);
    double scale = 1.0 / std::sqrt(kept);
    for (auto &a : amps) {
        a *= scale;
    }
    return FockVector(std::move(amps), leakage);
}

FockVector fock_basis_state(int n, int cutoff) {
    if (cutoff < 0 || n < 0 || n > cutoff) {
        throw InputError("fock_basis_state: need 0 <= n <= cutoff, got n=" + std::to_string(n) +
                         " cutoff=" + std::to_string(cutoff));
    }
    std::vector<Complex> amps(static_cast<std::size_t>(cutoff) + 1);
    amps[n] = 1.0;
    return FockVector(std::move(amps));
}

FockVector vacuum(int cutoff) {
    return fock_basis_state(0, cutoff);
}

FockVector apply_phase_shift(const FockVector &state, double theta) {
    std::vector<Complex> out(state.amps().begin(), state.amps().end());
    for (std::size_t n = 0; n < out.size(); ++n) {
        out[n] *= std::polar(1.0, theta * static_cast<double>(n));
    }
    return FockVector(std::move(out), state.leakage());
}

Complex overlap(const FockVector &bra, const FockVector &ket) {
    if (bra.cutoff() != ket.cutoff()) {
        throw InputError("overlap: cutoff mismatch");
    }
    Complex total = 0.0;
    for (int n = 0; n <= bra.cutoff(); ++n) {
        total += std::conj(bra[n]) * ket[n];
    }
    return total;
}

double fidelity(const FockVector &target, const FockVector &state) {
    double nt = squared_norm(target.amps());
    double ns = squared_norm(state.amps());
    if (nt == 0.0 || ns == 0.0) {
        throw InputError("fidelity: zero state");
    }
    return clamp_unit(std::norm(overlap(target, state)) / (nt * ns));
}

MultiModeState::MultiModeState(std::vector<int> cutoffs, std::vector<Complex> amps)
    : cutoffs_(std::move(cutoffs)), strides_(cutoffs_.size()), amps_(std::move(amps)) {
    for (int c : cutoffs_) {
        if (c < 0) {
            throw InputError("MultiModeState: negative cutoff");
        }
    }
    if (amps_.size() != product_of_dims(cutoffs_)) {
        throw InputError("MultiModeState: amplitude count does not match cutoffs");
    }
    std::size_t stride = 1;
    for (std::size_t i = cutoffs_.size(); i-- > 0;) {
        strides_[i] = stride;
        stride *= static_cast<std::size_t>(cutoffs_[i]) + 1;
    }
}

MultiModeState MultiModeState::scalar(Complex value) {
    return MultiModeState({}, {value});
}

Complex MultiModeState::at(std::span<const int> photon_numbers) const {
    if (photon_numbers.size() != cutoffs_.size()) {
        throw InputError("MultiModeState::at: wrong number of indices");
    }
    std::size_t offset = 0;
    for (std::size_t i = 0; i < cutoffs_.size(); ++i) {
        if (photon_numbers[i] < 0 || photon_numbers[i] > cutoffs_[i]) {
            throw InputError("MultiModeState::at: photon number out of range");
        }
        offset += static_cast<std::size_t>(photon_numbers[i]) * strides_[i];
    }
    return amps_[offset];
}

double MultiModeState::norm() const {
    return std::sqrt(squared_norm(amps_));
}

MultiModeState MultiModeState::normalized() const {
    double n = norm();
    if (n == 0.0) {
        throw InputError("cannot normalize a zero MultiModeState");
    }
    std::vector<Complex> out(amps_);
    for (auto &a : out) {
        a /= n;
    }
    return MultiModeState(cutoffs_, std::move(out));
}

MultiModeState to_multimode(const FockVector &state) {
    return MultiModeState({state.cutoff()}, std::vector<Complex>(state.amps().begin(), state.amps().end()));
}

FockVector to_fock_vector(const MultiModeState &state) {
    if (state.num_modes() != 1) {
        throw InputError("to_fock_vector: state has " + std::to_string(state.num_modes()) + " modes");
    }
    return FockVector(std::vector<Complex>(state.amps().begin(), state.amps().end()));
}

MultiModeState tensor(const MultiModeState &first, const MultiModeState &second) {
    std::vector<int> cutoffs(first.cutoffs());
    cutoffs.insert(cutoffs.end(), second.cutoffs().begin(), second.cutoffs().end());
    std::vector<Complex> amps;
    amps.reserve(first.size() * second.size());
    for (const auto &a : first.amps()) {
        for (const auto &b : second.amps()) {
            amps.push_back(a * b);
        }
    }
    return MultiModeState(std::move(cutoffs), std::move(amps));
}

MultiModeState tensor(std::span<const FockVector> states) {
    if (states.empty()) {
        throw InputError("tensor: empty state list");
    }
    MultiModeState out = to_multimode(states[0]);
    for (std::size_t i = 1; i < states.size(); ++i) {
        out = tensor(out, to_multimode(states[i]));
    }
    return out;
}

MultiModeState apply_beamsplitter(const MultiModeState &state, std::size_t mode_i, std::size_t mode_j,
                                  double transmitivity) {
    require_mode(state, mode_i);
    require_mode(state, mode_j);
    if (mode_i == mode_j) {
        throw InputError("apply_beamsplitter: modes must differ");
    }
    if (state.cutoff(mode_i) != state.cutoff(mode_j)) {
        throw InputError("apply_beamsplitter: modes have different cutoffs");
    }
    if (!(transmitivity >= 0.0 && transmitivity <= 1.0)) {
        throw InputError("apply_beamsplitter: transmitivity must lie in [0, 1]");
    }
    const int cutoff = state.cutoff(mode_i);
    const std::size_t dim = static_cast<std::size_t>(cutoff) + 1;
    const std::size_t si = state.stride(mode_i);
    const std::size_t sj = state.stride(mode_j);
    BeamsplitterTable table(transmitivity, cutoff);

    auto in = state.amps();
    std::vector<Complex> out(in.size());
    for (std::size_t base = 0; base < in.size(); ++base) {
        if ((base / si) % dim != 0 || (base / sj) % dim != 0) {
            continue;
        }
        for (int s = 0; s <= 2 * cutoff; ++s) {
            int lo = std::max(0, s - cutoff);
            int hi = std::min(s, cutoff);
            for (int p = lo; p <= hi; ++p) {
                Complex acc = 0.0;
                for (int k = lo; k <= hi; ++k) {
                    std::size_t src = base + static_cast<std::size_t>(k) * si + static_cast<std::size_t>(s - k) * sj;
                    acc += table.element(p, k, s - k) * in[src];
                }
                out[base + static_cast<std::size_t>(p) * si + static_cast<std::size_t>(s - p) * sj] = acc;
            }
        }
    }
    return MultiModeState(state.cutoffs(), std::move(out));
}

MultiModeState apply_phase_shift(const MultiModeState &state, std::size_t mode, double theta) {
    require_mode(state, mode);
    const std::size_t dim = state.dim(mode);
    const std::size_t stride = state.stride(mode);
    std::vector<Complex> phases(dim);
    for (std::size_t n = 0; n < dim; ++n) {
        phases[n] = std::polar(1.0, theta * static_cast<double>(n));
    }
    std::vector<Complex> out(state.amps().begin(), state.amps().end());
    for (std::size_t f = 0; f < out.size(); ++f) {
        out[f] *= phases[(f / stride) % dim];
    }
    return MultiModeState(state.cutoffs(), std::move(out));
}

MultiModeState apply_single_mode_operator(const MultiModeState &state, std::size_t mode,
                                          const Eigen::MatrixXcd &op) {
    require_mode(state, mode);
    const std::size_t dim = state.dim(mode);
    if (static_cast<std::size_t>(op.rows()) != dim || static_cast<std::size_t>(op.cols()) != dim) {
        throw InputError("apply_single_mode_operator: operator shape does not match the mode");
    }
    const std::size_t stride = state.stride(mode);
    auto in = state.amps();
    std::vector<Complex> out(in.size());
    for (std::size_t base = 0; base < in.size(); ++base) {
        if ((base / stride) % dim != 0) {
            continue;
        }
        for (std::size_t p = 0; p < dim; ++p) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                acc += op(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(k)) * in[base + k * stride];
            }
            out[base + p * stride] = acc;
        }
    }
    return MultiModeState(state.cutoffs(), std::move(out));
}

Projection project_photon_number(const MultiModeState &state, std::span<const ModeCount> counts) {
    std::vector<bool> measured(state.num_modes(), false);
    std::size_t base = 0;
    for (const auto &c : counts) {
        require_mode(state, c.mode);
        if (measured[c.mode]) {
            throw InputError("project_photon_number: mode listed twice");
        }
        if (c.n < 0 || c.n > state.cutoff(c.mode)) {
            throw InputError("project_photon_number: photon number " + std::to_string(c.n) +
                             " outside 0.." + std::to_string(state.cutoff(c.mode)));
        }
        measured[c.mode] = true;
        base += static_cast<std::size_t>(c.n) * state.stride(c.mode);
    }

    std::vector<std::size_t> free_modes;
    std::vector<int> free_cutoffs;
    for (std::size_t m = 0; m < state.num_modes(); ++m) {
        if (!measured[m]) {
            free_modes.push_back(m);
            free_cutoffs.push_back(state.cutoff(m));
        }
    }

    std::vector<Complex> slice(product_of_dims(free_cutoffs));
    std::vector<int> digits(free_modes.size(), 0);
    auto in = state.amps();
    for (std::size_t f = 0; f < slice.size(); ++f) {
        std::size_t offset = base;
        for (std::size_t d = 0; d < free_modes.size(); ++d) {
            offset += static_cast<std::size_t>(digits[d]) * state.stride(free_modes[d]);
        }
        slice[f] = in[offset];
        for (std::size_t d = free_modes.size(); d-- > 0;) {
            if (++digits[d] <= free_cutoffs[d]) {
                break;
            }
            digits[d] = 0;
        }
    }

    Projection result;
    result.probability = squared_norm(slice);
    if (result.probability == 0.0) {
        return result;
    }
    double scale = 1.0 / std::sqrt(result.probability);
    for (auto &a : slice) {
        a *= scale;
    }
    result.state = MultiModeState(std::move(free_cutoffs), std::move(slice));
    return result;
}

DensityMatrix::DensityMatrix(std::vector<int> cutoffs, Eigen::MatrixXcd elems)
    : cutoffs_(std::move(cutoffs)), elems_(std::move(elems)) {
    const auto dim = static_cast<Eigen::Index>(product_of_dims(cutoffs_));
    if (elems_.rows() != dim || elems_.cols() != dim) {
        throw InputError("DensityMatrix: matrix shape does not match cutoffs");
    }
    if (!elems_.allFinite()) {
        throw InputError("DensityMatrix: non-finite element");
    }
    double asym = (elems_ - elems_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > 1e-10) {
        throw InputError("DensityMatrix: matrix is not Hermitian");
    }
}

DensityMatrix DensityMatrix::pure(const FockVector &state) {
    return pure(to_multimode(state));
}

DensityMatrix DensityMatrix::pure(const MultiModeState &state) {
    MultiModeState psi = state.normalized();
    Eigen::Map<const Eigen::VectorXcd> v(psi.amps().data(), static_cast<Eigen::Index>(psi.size()));
    return DensityMatrix(psi.cutoffs(), v * v.adjoint());
}

int DensityMatrix::cutoff() const {
    if (cutoffs_.size() != 1) {
        throw InputError("DensityMatrix::cutoff: matrix is not single-mode");
    }
    return cutoffs_[0];
}

DensityMatrix partial_trace(const MultiModeState &state, std::size_t keep_mode) {
    const std::size_t keep[] = {keep_mode};
    return partial_trace(state, keep);
}

DensityMatrix partial_trace(const MultiModeState &state, std::span<const std::size_t> keep_modes) {
    std::vector<bool> kept(state.num_modes(), false);
    std::vector<int> keep_cutoffs;
    for (std::size_t m : keep_modes) {
        require_mode(state, m);
        if (kept[m]) {
            throw InputError("partial_trace: mode listed twice");
        }
        kept[m] = true;
        keep_cutoffs.push_back(state.cutoff(m));
    }
    std::vector<std::size_t> traced;
    for (std::size_t m = 0; m < state.num_modes(); ++m) {
        if (!kept[m]) {
            traced.push_back(m);
        }
    }

    // Row/column index weights within the kept and traced subsystems.
    auto weights = [&](const std::vector<std::size_t> &modes) {
        std::vector<std::size_t> w(modes.size());
        std::size_t acc = 1;
        for (std::size_t i = modes.size(); i-- > 0;) {
            w[i] = acc;
            acc *= state.dim(modes[i]);
        }
        return std::pair{w, acc};
    };
    std::vector<std::size_t> keep_list(keep_modes.begin(), keep_modes.end());
    auto [keep_w, keep_dim] = weights(keep_list);
    auto [trace_w, trace_dim] = weights(traced);

    double total = state.norm();
    if (total == 0.0) {
        throw InputError("partial_trace: zero state");
    }
    Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(keep_dim),
                                                  static_cast<Eigen::Index>(trace_dim));
    auto amps = state.amps();
    for (std::size_t f = 0; f < amps.size(); ++f) {
        std::size_t row = 0;
        std::size_t col = 0;
        for (std::size_t i = 0; i < keep_list.size(); ++i) {
            row += ((f / state.stride(keep_list[i])) % state.dim(keep_list[i])) * keep_w[i];
        }
        for (std::size_t i = 0; i < traced.size(); ++i) {
            col += ((f / state.stride(traced[i])) % state.dim(traced[i])) * trace_w[i];
        }
        psi(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = amps[f] / total;
    }
    Eigen::MatrixXcd rho = psi * psi.adjoint();
    Eigen::MatrixXcd herm = 0.5 * (rho + rho.adjoint());
    return DensityMatrix(std::move(keep_cutoffs), std::move(herm));
}

double reduced_fidelity(const MultiModeState &target, const MultiModeState &state) {
    const std::size_t lead = target.num_modes();
    if (lead > state.num_modes()) {
        throw InputError("reduced_fidelity: target has more modes than the state");
    }
    for (std::size_t m = 0; m < lead; ++m) {
        if (target.cutoff(m) != state.cutoff(m)) {
            throw InputError("reduced_fidelity: cutoff mismatch on mode " + std::to_string(m));
        }
    }
    double nt = squared_norm(target.amps());
    double ns = squared_norm(state.amps());
    if (nt == 0.0 || ns == 0.0) {
        throw InputError("reduced_fidelity: zero state");
    }
    const std::size_t rest = state.size() / target.size();
    auto t = target.amps();
    auto s = state.amps();
    double total = 0.0;
    for (std::size_t r = 0; r < rest; ++r) {
        Complex acc = 0.0;
        for (std::size_t l = 0; l < t.size(); ++l) {
            acc += std::conj(t[l]) * s[l * rest + r];
        }
        total += std::norm(acc);
    }
    return clamp_unit(total / (nt * ns));
}

double fidelity(const MultiModeState &target, const MultiModeState &state) {
    if (target.cutoffs() != state.cutoffs()) {
        throw InputError("fidelity: mode structure mismatch");
    }
    return reduced_fidelity(target, state);
}

double fidelity(const MultiModeState &target, const DensityMatrix &rho) {
    if (target.cutoffs() != rho.mode_cutoffs()) {
        throw InputError("fidelity: mode structure mismatch");
    }
    MultiModeState phi = target.normalized();
    Eigen::Map<const Eigen::VectorXcd> v(phi.amps().data(), static_cast<Eigen::Index>(phi.size()));
    Complex f = v.dot(rho.elems() * v);
    return clamp_unit(f.real());
}

double fidelity(const FockVector &target, const DensityMatrix &rho) {
    return fidelity(to_multimode(target), rho);
}

}  // namespace cskit
