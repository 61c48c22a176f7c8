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

#ifndef CSKIT_FOCK_H
#define CSKIT_FOCK_H

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace cskit {

using Complex = std::complex<double>;

/// Single-mode pure state over photon numbers 0..cutoff.
///
/// Constructors that truncate an infinite expansion renormalize over the
/// kept support and record the discarded weight in leakage().
class FockVector {
   public:
    explicit FockVector(std::vector<Complex> amps, double leakage = 0.0);

    int cutoff() const {
        return static_cast<int>(amps_.size()) - 1;
    }
    std::span<const Complex> amps() const {
        return amps_;
    }
    const Complex &operator[](int n) const {
        return amps_[static_cast<std::size_t>(n)];
    }
    double norm() const;
    /// Weight of the untruncated state that fell outside 0..cutoff.
    double leakage() const {
        return leakage_;
    }
    FockVector normalized() const;

   private:
    std::vector<Complex> amps_;
    double leakage_;
};

/// e^{-|a|^2/2} a^n / sqrt(n!), renormalized. Requires |alpha|^2 <= cutoff/3.
FockVector coherent_state(Complex alpha, int cutoff);
FockVector fock_basis_state(int n, int cutoff);
FockVector vacuum(int cutoff);
FockVector apply_phase_shift(const FockVector &state, double theta);

/// <bra|ket>.
Complex overlap(const FockVector &bra, const FockVector &ket);
/// |<target|state>|^2 / (|target|^2 |state|^2).
double fidelity(const FockVector &target, const FockVector &state);

/// Dense pure state over k modes, row-major with mode 0 most significant.
class MultiModeState {
   public:
    MultiModeState(std::vector<int> cutoffs, std::vector<Complex> amps);

    /// Zero-mode state holding a single amplitude.
    static MultiModeState scalar(Complex value);

    std::size_t num_modes() const {
        return cutoffs_.size();
    }
    const std::vector<int> &cutoffs() const {
        return cutoffs_;
    }
    int cutoff(std::size_t mode) const {
        return cutoffs_.at(mode);
    }
    /// Number of basis states of one mode (cutoff + 1).
    std::size_t dim(std::size_t mode) const {
        return static_cast<std::size_t>(cutoffs_.at(mode)) + 1;
    }
    std::size_t stride(std::size_t mode) const {
        return strides_.at(mode);
    }
    std::size_t size() const {
        return amps_.size();
    }
    std::span<const Complex> amps() const {
        return amps_;
    }
    Complex at(std::span<const int> photon_numbers) const;
    double norm() const;
    MultiModeState normalized() const;

   private:
    std::vector<int> cutoffs_;
    std::vector<std::size_t> strides_;
    std::vector<Complex> amps_;
};

MultiModeState to_multimode(const FockVector &state);
/// Single-mode view of a one-mode state.
FockVector to_fock_vector(const MultiModeState &state);

MultiModeState tensor(std::span<const FockVector> states);
MultiModeState tensor(const MultiModeState &first, const MultiModeState &second);

/// Two-mode beamsplitter with a -> sqrt(t) a + sqrt(1-t) b, b -> sqrt(1-t) a - sqrt(t) b.
///
/// Both modes must share one cutoff. Sectors with total photon number above
/// the cutoff are only partially representable; there the projection of the
/// exact sector unitary is applied.
MultiModeState apply_beamsplitter(const MultiModeState &state, std::size_t mode_i, std::size_t mode_j,
                                  double transmitivity);

/// Multiplies the amplitude of n photons in `mode` by e^{i n theta}.
MultiModeState apply_phase_shift(const MultiModeState &state, std::size_t mode, double theta);

/// Applies a (cutoff+1)x(cutoff+1) operator to one mode.
MultiModeState apply_single_mode_operator(const MultiModeState &state, std::size_t mode,
                                          const Eigen::MatrixXcd &op);

struct ModeCount {
    std::size_t mode;
    int n;
};

struct Projection {
    double probability = 0.0;
    /// Renormalized state of the unmeasured modes, in their original order.
    /// Absent iff probability is exactly zero.
    std::optional<MultiModeState> state;
};

Projection project_photon_number(const MultiModeState &state, std::span<const ModeCount> counts);

/// Density matrix over one or more modes (row index in the same row-major
/// layout as MultiModeState).
class DensityMatrix {
   public:
    DensityMatrix(std::vector<int> cutoffs, Eigen::MatrixXcd elems);

    static DensityMatrix pure(const FockVector &state);
    static DensityMatrix pure(const MultiModeState &state);

    const std::vector<int> &mode_cutoffs() const {
        return cutoffs_;
    }
    /// Cutoff of a single-mode matrix; throws for multi-mode matrices.
    int cutoff() const;
    std::size_t dim() const {
        return static_cast<std::size_t>(elems_.rows());
    }
    const Eigen::MatrixXcd &elems() const {
        return elems_;
    }
    Complex operator()(std::size_t row, std::size_t col) const {
        return elems_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    Complex trace() const {
        return elems_.trace();
    }

   private:
    std::vector<int> cutoffs_;
    Eigen::MatrixXcd elems_;
};

DensityMatrix partial_trace(const MultiModeState &state, std::size_t keep_mode);
/// Keeps `keep_modes` (in the given order) and traces out the rest.
DensityMatrix partial_trace(const MultiModeState &state, std::span<const std::size_t> keep_modes);

double fidelity(const MultiModeState &target, const MultiModeState &state);
/// <phi|rho|phi> with phi normalized.
double fidelity(const FockVector &target, const DensityMatrix &rho);
double fidelity(const MultiModeState &target, const DensityMatrix &rho);

/// <phi| rho_lead |phi> where rho_lead is the reduced state of the leading
/// target.num_modes() modes of `state`; the trailing modes are summed over
/// as a purification. Equals fidelity(target, partial_trace(...)) without
/// building the density matrix.
double reduced_fidelity(const MultiModeState &target, const MultiModeState &state);

}  // namespace cskit

#endif
