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

#include "cskit/protocols.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "cskit/errors.h"
#include "protocol_engine.h"

namespace cskit {

FockVector QubitSuperposition::state(int cutoff) const {
    FockVector plus = coherent_state(alpha, cutoff);
    FockVector minus = coherent_state(-alpha, cutoff);
    std::vector<Complex> amps(plus.amps().size());
    for (std::size_t k = 0; k < amps.size(); ++k) {
        amps[k] = mu * plus.amps()[k] + nu * minus.amps()[k];
    }
    FockVector v(std::move(amps), std::max(plus.leakage(), minus.leakage()));
    if (v.norm() == 0.0) {
        throw InputError("QubitSuperposition: coefficients give the zero vector");
    }
    return v.normalized();
}

InputSpec InputSpec::coherent(double alpha) {
    return {InputKind::coherent, alpha};
}
InputSpec InputSpec::odd_cat(double alpha) {
    return {InputKind::odd_cat, alpha};
}
InputSpec InputSpec::even_cat(double alpha) {
    return {InputKind::even_cat, alpha};
}
InputSpec InputSpec::superposition(Complex mu, Complex nu, double alpha) {
    return {InputKind::superposition, alpha, mu, nu};
}
InputSpec InputSpec::squeezed_single_photon(double alpha) {
    return {InputKind::squeezed_single_photon, alpha};
}
InputSpec InputSpec::squeezed_vacuum(double alpha) {
    return {InputKind::squeezed_vacuum, alpha};
}

InputSpec InputSpec::with_alpha(double new_alpha) const {
    InputSpec s = *this;
    s.alpha = new_alpha;
    return s;
}

FockVector prepare_input(const InputSpec &spec, int cutoff) {
    if (!std::isfinite(spec.alpha) || spec.alpha < 0.0) {
        throw InputError("prepare_input: alpha must be finite and >= 0");
    }
    switch (spec.kind) {
        case InputKind::coherent:
            return coherent_state(spec.alpha, cutoff);
        case InputKind::odd_cat:
            return cat_state(spec.alpha, Parity::odd, cutoff);
        case InputKind::even_cat:
            return cat_state(spec.alpha, Parity::even, cutoff);
        case InputKind::superposition:
            return QubitSuperposition{spec.mu, spec.nu, spec.alpha}.state(cutoff);
        case InputKind::squeezed_single_photon:
            return squeezed_single_photon(r_opt(spec.alpha), cutoff);
        case InputKind::squeezed_vacuum:
            return squeezed_vacuum(r_opt_v(spec.alpha), cutoff);
    }
    throw InputError("prepare_input: unknown input kind");
}

FockVector prepare_resource(const ResourceSpec &spec, int cutoff) {
    switch (spec.kind) {
        case ResourceKind::ideal_odd_cat:
            return cat_state(spec.beta, Parity::odd, cutoff);
        case ResourceKind::ideal_even_cat:
            return cat_state(spec.beta, Parity::even, cutoff);
        case ResourceKind::squeezed_single_photon:
            return squeezed_single_photon(r_opt(spec.beta), cutoff);
        case ResourceKind::squeezed_vacuum:
            return squeezed_vacuum(r_opt_v(spec.beta), cutoff);
    }
    throw InputError("prepare_resource: unknown resource kind");
}

Parity resource_parity(ResourceKind kind) {
    switch (kind) {
        case ResourceKind::ideal_odd_cat:
        case ResourceKind::squeezed_single_photon:
            return Parity::odd;
        case ResourceKind::ideal_even_cat:
        case ResourceKind::squeezed_vacuum:
            return Parity::even;
    }
    throw InputError("resource_parity: unknown resource kind");
}

std::string_view to_string(InputKind kind) {
    switch (kind) {
        case InputKind::coherent:
            return "coherent";
        case InputKind::odd_cat:
            return "odd-cat";
        case InputKind::even_cat:
            return "even-cat";
        case InputKind::superposition:
            return "superposition";
        case InputKind::squeezed_single_photon:
            return "sq1";
        case InputKind::squeezed_vacuum:
            return "sq0";
    }
    return "?";
}

std::string_view to_string(ResourceKind kind) {
    switch (kind) {
        case ResourceKind::ideal_odd_cat:
            return "odd-cat";
        case ResourceKind::ideal_even_cat:
            return "even-cat";
        case ResourceKind::squeezed_single_photon:
            return "sq1";
        case ResourceKind::squeezed_vacuum:
            return "sq0";
    }
    return "?";
}

std::string_view to_string(Correction c) {
    switch (c) {
        case Correction::none:
            return "none";
        case Correction::identity:
            return "I";
        case Correction::x:
            return "X";
        case Correction::z:
            return "Z";
        case Correction::xz:
            return "XZ";
    }
    return "?";
}

MultiModeState build_teleporter_input(const FockVector &input, const FockVector &resource) {
    if (input.cutoff() != resource.cutoff()) {
        throw InputError("build_teleporter_input: input and resource cutoffs differ");
    }
    std::array<FockVector, 3> modes{input, resource, vacuum(input.cutoff())};
    MultiModeState s = tensor(modes);
    s = apply_beamsplitter(s, 1, 2, 0.5);
    return apply_beamsplitter(s, 0, 1, 0.5);
}

std::vector<OutcomeRecord> enumerate_outcomes(const MultiModeState &state, std::size_t mode_n,
                                              std::size_t mode_m) {
    if (mode_n >= state.num_modes() || mode_m >= state.num_modes() || mode_n == mode_m) {
        throw InputError("enumerate_outcomes: bad detector modes");
    }
    const std::size_t dn = state.dim(mode_n), dm = state.dim(mode_m);
    const std::size_t sn = state.stride(mode_n), sm = state.stride(mode_m);
    std::vector<double> weight(dn * dm, 0.0);
    auto amps = state.amps();
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
        std::size_t n = (idx / sn) % dn;
        std::size_t m = (idx / sm) % dm;
        weight[n * dm + m] += std::norm(amps[idx]);
    }
    double total = state.norm();
    total *= total;
    if (total == 0.0) {
        throw InputError("enumerate_outcomes: zero state");
    }
    std::vector<OutcomeRecord> out;
    out.reserve(weight.size());
    for (std::size_t n = 0; n < dn; ++n) {
        for (std::size_t m = 0; m < dm; ++m) {
            OutcomeRecord r;
            r.n = static_cast<int>(n);
            r.m = static_cast<int>(m);
            r.probability = weight[n * dm + m] / total;
            r.accepted = (n == 0) != (m == 0);
            out.push_back(r);
        }
    }
    return out;
}

std::vector<OutcomeRecord> enumerate_outcomes(const MultiModeState &state3) {
    if (state3.num_modes() != 3) {
        throw InputError("enumerate_outcomes: expected a 3-mode state");
    }
    return enumerate_outcomes(state3, 0, 1);
}

Correction correction_for(int n, int m, Parity parity) {
    if ((n == 0) == (m == 0) || n < 0 || m < 0) {
        throw ContractError("correction_for: outcome (" + std::to_string(n) + ", " + std::to_string(m) +
                            ") is not accepted");
    }
    int count = n > 0 ? n : m;
    // An even resource shifts the total parity by one photon.
    bool matches = (count % 2 == 1) == (parity == Parity::odd);
    if (n > 0) {
        return matches ? Correction::identity : Correction::z;
    }
    return matches ? Correction::x : Correction::xz;
}

CorrectedState apply_correction(const FockVector &output, int n, int m, Parity parity) {
    Correction c = correction_for(n, m, parity);
    if (c == Correction::x || c == Correction::xz) {
        return {apply_phase_shift(output, std::numbers::pi), c};
    }
    return {output, c};
}

Eigen::MatrixXcd coherent_qubit_z(double alpha, int cutoff) {
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw InputError("coherent_qubit_z: alpha must be finite and >= 0");
    }
    FockVector a = coherent_state(alpha, cutoff);
    FockVector b = coherent_state(-alpha, cutoff);
    Complex s = overlap(a, b);
    double gap = 1.0 - std::norm(s);
    if (gap < 1e-14) {
        throw InputError("coherent_qubit_z: |alpha> and |-alpha> are not distinguishable");
    }
    const Eigen::Index d = cutoff + 1;
    Eigen::VectorXcd va(d), vb(d);
    for (Eigen::Index k = 0; k < d; ++k) {
        va(k) = a[static_cast<int>(k)];
        vb(k) = b[static_cast<int>(k)];
    }
    // Dual of |-alpha> inside span{|alpha>, |-alpha>}.
    Eigen::VectorXcd dual = (vb - s * va) / gap;
    return Eigen::MatrixXcd::Identity(d, d) - 2.0 * vb * dual.adjoint();
}

namespace detail {

MultiModeState pauli_frame_z(const MultiModeState &target, std::size_t mode, double alpha) {
    return apply_single_mode_operator(target, mode, coherent_qubit_z(alpha, target.cutoff(mode))).normalized();
}

ProtocolSummary evaluate(const Scenario &sc, const RunOptions &options, ProtocolConfig config) {
    config.include_even = options.include_even;
    ProtocolSummary summary;
    summary.outcomes = enumerate_outcomes(sc.state, sc.mode_n, sc.mode_m);

    std::optional<MultiModeState> z_target;
    std::vector<std::size_t> lead(sc.target.num_modes());
    for (std::size_t k = 0; k < lead.size(); ++k) {
        lead[k] = k;
    }

    double weighted = 0.0, weight = 0.0;
    for (auto &rec : summary.outcomes) {
        if (rec.n > 0 && rec.m > 0) {
            summary.both_nonzero_probability += rec.probability;
        } else if (rec.n == 0 && rec.m == 0) {
            summary.both_zero_probability += rec.probability;
        }
        if (!rec.accepted) {
            continue;
        }
        summary.success_probability += rec.probability;
        rec.correction = correction_for(rec.n, rec.m, sc.parity);
        bool has_z = rec.correction == Correction::z || rec.correction == Correction::xz;
        rec.averaged = !has_z || options.include_even;
        if (!rec.averaged || rec.probability < kNegligibleProbability) {
            continue;
        }
        std::array<ModeCount, 2> counts{ModeCount{sc.mode_n, rec.n}, ModeCount{sc.mode_m, rec.m}};
        Projection proj = project_photon_number(sc.state, counts);
        if (!proj.state) {
            continue;
        }
        MultiModeState out = std::move(*proj.state);
        if (rec.correction == Correction::x || rec.correction == Correction::xz) {
            out = apply_phase_shift(out, sc.x_mode, std::numbers::pi);
        }
        if (has_z && !z_target) {
            z_target = pauli_frame_z(sc.target, sc.z_mode, sc.z_alpha);
        }
        const MultiModeState &target = has_z ? *z_target : sc.target;
        double f;
        if (options.fidelity_method == FidelityMethod::partial_trace) {
            f = fidelity(target, partial_trace(out, lead));
        } else {
            f = reduced_fidelity(target, out);
        }
        rec.fidelity = f;
        weighted += rec.probability * f;
        weight += rec.probability;
    }
    if (weight > 0.0) {
        summary.average_fidelity_odd = weighted / weight;
    } else {
        summary.degenerate = true;
    }
    summary.config = std::move(config);
    return summary;
}

}  // namespace detail

namespace {

detail::Scenario teleport_scenario(const InputSpec &input, const ResourceSpec &resource, int cutoff) {
    FockVector in = prepare_input(input, cutoff);
    FockVector res = prepare_resource(resource, cutoff);
    detail::Scenario sc;
    sc.state = build_teleporter_input(in, res);
    sc.mode_n = 0;
    sc.mode_m = 1;
    sc.x_mode = 0;
    sc.target = to_multimode(in);
    sc.parity = resource_parity(resource.kind);
    sc.z_mode = 0;
    sc.z_alpha = input.alpha;
    return sc;
}

}  // namespace

ProtocolSummary run_teleportation(const InputSpec &input, const ResourceSpec &resource, int cutoff,
                                  const RunOptions &options) {
    ProtocolConfig config;
    config.protocol = "teleportation";
    config.cutoff = cutoff;
    config.input = input;
    config.resource = resource;
    config.working_modes = 3;
    return detail::evaluate(teleport_scenario(input, resource, cutoff), options, std::move(config));
}

std::optional<double> per_outcome_fidelity(const InputSpec &input, const ResourceSpec &resource, int m,
                                           int cutoff) {
    if (m < 1 || m > cutoff) {
        throw InputError("per_outcome_fidelity: m must be in [1, cutoff]");
    }
    detail::Scenario sc = teleport_scenario(input, resource, cutoff);
    std::array<ModeCount, 2> counts{ModeCount{0, 0}, ModeCount{1, m}};
    Projection proj = project_photon_number(sc.state, counts);
    if (!proj.state || proj.probability < detail::kNegligibleProbability) {
        return std::nullopt;
    }
    CorrectedState c = apply_correction(to_fock_vector(*proj.state), 0, m, sc.parity);
    MultiModeState target = c.correction == Correction::xz ? detail::pauli_frame_z(sc.target, 0, input.alpha)
                                                           : sc.target;
    return fidelity(target, to_multimode(c.state));
}

std::vector<InputSpec> success_probability_families() {
    return {InputSpec::odd_cat(0.0), InputSpec::superposition(0.5, -std::sqrt(3.0) / 2.0, 0.0),
            InputSpec::coherent(0.0), InputSpec::even_cat(0.0)};
}

std::vector<SuccessRow> success_probability_sweep(std::span<const InputSpec> families,
                                                  std::span<const ResourceKind> resources,
                                                  std::span<const double> betas, int cutoff) {
    if (families.empty() || resources.empty() || betas.empty()) {
        throw InputError("success_probability_sweep: empty grid");
    }
    std::vector<SuccessRow> rows;
    rows.reserve(betas.size() * families.size() * resources.size());
    for (double beta : betas) {
        for (const auto &family : families) {
            InputSpec input = family.with_alpha(beta / std::numbers::sqrt2);
            FockVector in = prepare_input(input, cutoff);
            for (ResourceKind kind : resources) {
                FockVector res = prepare_resource({kind, beta}, cutoff);
                auto outcomes = enumerate_outcomes(build_teleporter_input(in, res));
                double p = 0.0, both = 0.0;
                for (const auto &r : outcomes) {
                    if (r.accepted) {
                        p += r.probability;
                    } else if (r.n > 0 && r.m > 0) {
                        both += r.probability;
                    }
                }
                rows.push_back({beta, input, kind, p, both});
            }
        }
    }
    return rows;
}

ProtocolSummary run_entanglement_swap(const ResourceSpec &phi, const ResourceSpec &resource, int cutoff,
                                      const RunOptions &options) {
    FockVector p = prepare_resource(phi, cutoff);
    FockVector r = prepare_resource(resource, cutoff);
    FockVector vac = vacuum(cutoff);
    std::array<FockVector, 2> pair_modes{p, vac};
    MultiModeState pair = apply_beamsplitter(tensor(pair_modes), 0, 1, 0.5);

    std::array<FockVector, 4> modes{p, vac, r, vac};
    MultiModeState s = tensor(modes);
    s = apply_beamsplitter(s, 0, 1, 0.5);
    s = apply_beamsplitter(s, 2, 3, 0.5);
    s = apply_beamsplitter(s, 1, 2, 0.5);

    detail::Scenario sc;
    sc.state = std::move(s);
    sc.mode_n = 1;
    sc.mode_m = 2;
    sc.x_mode = 1;
    sc.target = std::move(pair);
    sc.parity = resource_parity(resource.kind);
    sc.z_mode = 1;
    sc.z_alpha = phi.beta / std::numbers::sqrt2;

    ProtocolConfig config;
    config.protocol = "entanglement_swap";
    config.cutoff = cutoff;
    config.phi = phi;
    config.resource = resource;
    config.working_modes = 4;
    return detail::evaluate(sc, options, std::move(config));
}

}  // namespace cskit
