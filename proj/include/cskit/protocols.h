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

#ifndef CSKIT_PROTOCOLS_H
#define CSKIT_PROTOCOLS_H

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cskit/cat.h"
#include "cskit/fock.h"

namespace cskit {

enum class InputKind { coherent, odd_cat, even_cat, superposition, squeezed_single_photon, squeezed_vacuum };

/// mu|alpha> + nu|-alpha>, normalized including the <alpha|-alpha> overlap.
struct QubitSuperposition {
    Complex mu;
    Complex nu;
    double alpha;

    FockVector state(int cutoff) const;
};

/// State to teleport. `alpha` is the coherent amplitude of the qubit basis;
/// squeezed inputs use r' = r_opt(alpha) (odd) or r'' = r_opt_v(alpha) (even).
struct InputSpec {
    InputKind kind = InputKind::coherent;
    double alpha = 0.0;
    Complex mu{1.0, 0.0};
    Complex nu{0.0, 0.0};

    static InputSpec coherent(double alpha);
    static InputSpec odd_cat(double alpha);
    static InputSpec even_cat(double alpha);
    static InputSpec superposition(Complex mu, Complex nu, double alpha);
    static InputSpec squeezed_single_photon(double alpha);
    static InputSpec squeezed_vacuum(double alpha);

    InputSpec with_alpha(double new_alpha) const;
};

FockVector prepare_input(const InputSpec &spec, int cutoff);

enum class ResourceKind { ideal_odd_cat, ideal_even_cat, squeezed_single_photon, squeezed_vacuum };

/// Resource of amplitude beta; squeezed kinds use r = r_opt(beta) or r_opt_v(beta).
struct ResourceSpec {
    ResourceKind kind = ResourceKind::ideal_odd_cat;
    double beta = 0.0;
};

FockVector prepare_resource(const ResourceSpec &spec, int cutoff);
Parity resource_parity(ResourceKind kind);

std::string_view to_string(InputKind kind);
std::string_view to_string(ResourceKind kind);

enum class Correction { none, identity, x, z, xz };
std::string_view to_string(Correction c);

struct OutcomeRecord {
    int n = 0;
    int m = 0;
    double probability = 0.0;
    Correction correction = Correction::none;
    /// Exactly one detector fired.
    bool accepted = false;
    /// Counted in average_fidelity_odd.
    bool averaged = false;
    std::optional<double> fidelity;
};

enum class FidelityMethod { environment_sum, partial_trace };

struct RunOptions {
    /// Also average Z/XZ outcomes, with Z tracked on the target (diagnostic).
    bool include_even = false;
    FidelityMethod fidelity_method = FidelityMethod::environment_sum;
};

struct ProtocolConfig {
    std::string protocol;
    int cutoff = 0;
    std::optional<InputSpec> input;
    std::optional<ResourceSpec> phi;
    ResourceSpec resource;
    double eta1 = 1.0;
    double eta2 = 1.0;
    std::size_t working_modes = 0;
    std::size_t environment_modes = 0;
    bool include_even = false;
};

struct ProtocolSummary {
    /// Total probability of accepted outcomes.
    double success_probability = 0.0;
    /// Probability-weighted fidelity over averaged outcomes (weights renormalized).
    double average_fidelity_odd = std::numeric_limits<double>::quiet_NaN();
    double both_zero_probability = 0.0;
    double both_nonzero_probability = 0.0;
    /// No averaged outcome had nonzero probability.
    bool degenerate = false;
    std::vector<OutcomeRecord> outcomes;
    ProtocolConfig config;
};

/// input (a) x resource (b) x vacuum (c), 50:50 on (b, c) then 50:50 on (a, b).
MultiModeState build_teleporter_input(const FockVector &input, const FockVector &resource);

/// One record per (n, m) on the detector lattice of modes 0 and 1; no fidelities.
std::vector<OutcomeRecord> enumerate_outcomes(const MultiModeState &state3);
std::vector<OutcomeRecord> enumerate_outcomes(const MultiModeState &state, std::size_t mode_n,
                                              std::size_t mode_m);

/// Correction demanded by an accepted outcome. Throws ContractError otherwise.
Correction correction_for(int n, int m, Parity resource_parity);

struct CorrectedState {
    FockVector state;
    Correction correction;
};

/// Applies the X part of the correction (a pi phase shift); Z is only labeled.
CorrectedState apply_correction(const FockVector &output, int n, int m, Parity resource_parity = Parity::odd);

/// Z of the coherent qubit {|alpha>, |-alpha>} as a single-mode operator:
/// flips the sign of the |-alpha> component, identity on the orthogonal complement.
Eigen::MatrixXcd coherent_qubit_z(double alpha, int cutoff);

ProtocolSummary run_teleportation(const InputSpec &input, const ResourceSpec &resource, int cutoff = 15,
                                  const RunOptions &options = {});

/// Fidelity of the corrected output for the single outcome (n = 0, m).
/// Even m are compared against the Pauli-frame Z of the input. Absent when
/// the outcome has zero probability.
std::optional<double> per_outcome_fidelity(const InputSpec &input, const ResourceSpec &resource, int m,
                                           int cutoff = 15);

/// The four input families of the success-probability study (alpha unset):
/// odd cat, (|a> - sqrt3|-a>)/2, coherent, even cat.
std::vector<InputSpec> success_probability_families();

struct SuccessRow {
    double beta;
    InputSpec input;
    ResourceKind resource;
    double success_probability;
    double both_nonzero_probability;
};

/// Rows ordered beta-major, then family, then resource. Inputs use alpha = beta / sqrt 2.
std::vector<SuccessRow> success_probability_sweep(std::span<const InputSpec> families,
                                                  std::span<const ResourceKind> resources,
                                                  std::span<const double> betas, int cutoff = 15);

/// phi on (a, b) via 50:50 forms the Bell pair, resource on (c, d) likewise;
/// teleporter beamsplitter on (b, c), detectors on b and c. Fidelity is
/// between the Bell pair (a, b) and the corrected output (a, d).
ProtocolSummary run_entanglement_swap(const ResourceSpec &phi, const ResourceSpec &resource, int cutoff = 15,
                                      const RunOptions &options = {});

}  // namespace cskit

#endif
