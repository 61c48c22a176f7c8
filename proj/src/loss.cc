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

#include "cskit/loss.h"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "cskit/errors.h"
#include "protocol_engine.h"

namespace cskit {

namespace {

void check_eta(double eta, const char *name) {
    if (!std::isfinite(eta) || eta < 0.0 || eta > 1.0) {
        throw InputError(std::string(name) + " must be in [0, 1]");
    }
}

}  // namespace

void LossConfig::validate() const {
    check_eta(eta1, "eta1");
    check_eta(eta2, "eta2");
}

MultiModeState attenuate(const MultiModeState &state, std::size_t mode, double eta) {
    check_eta(eta, "attenuate: eta");
    if (mode >= state.num_modes()) {
        throw InputError("attenuate: mode out of range");
    }
    MultiModeState env = to_multimode(vacuum(state.cutoff(mode)));
    MultiModeState s = tensor(state, env);
    return apply_beamsplitter(s, mode, s.num_modes() - 1, eta);
}

ProtocolSummary run_lossy_teleportation(const InputSpec &input, const ResourceSpec &resource, LossConfig loss,
                                        int cutoff, const RunOptions &options) {
    loss.validate();
    const double matched = std::sqrt(loss.eta1) * input.alpha;
    InputSpec in_spec = input.with_alpha(matched);
    FockVector in = prepare_input(in_spec, cutoff);
    FockVector res = prepare_resource(resource, cutoff);

    std::array<FockVector, 3> modes{in, res, vacuum(cutoff)};
    MultiModeState s = tensor(modes);
    s = attenuate(s, 1, loss.eta1);  // e1
    s = apply_beamsplitter(s, 1, 2, 0.5);
    s = apply_beamsplitter(s, 0, 1, 0.5);
    s = attenuate(s, 0, loss.eta2);  // e2
    s = attenuate(s, 1, loss.eta2);  // e3

    detail::Scenario sc;
    sc.state = std::move(s);
    sc.mode_n = 0;
    sc.mode_m = 1;
    sc.x_mode = 0;
    sc.target = to_multimode(in);
    sc.parity = resource_parity(resource.kind);
    sc.z_mode = 0;
    sc.z_alpha = matched;

    ProtocolConfig config;
    config.protocol = "lossy_teleportation";
    config.cutoff = cutoff;
    config.input = input;
    config.resource = resource;
    config.eta1 = loss.eta1;
    config.eta2 = loss.eta2;
    config.working_modes = 3;
    config.environment_modes = 3;
    return detail::evaluate(sc, options, std::move(config));
}

ProtocolSummary run_lossy_entswap(ResourceKind phi_kind, double beta, LossConfig loss, int cutoff,
                                  const RunOptions &options) {
    loss.validate();
    ResourceSpec phi{phi_kind, std::sqrt(loss.eta1) * beta};
    ResourceSpec resource{phi_kind, beta};
    FockVector p = prepare_resource(phi, cutoff);
    FockVector r = prepare_resource(resource, cutoff);
    FockVector vac = vacuum(cutoff);

    std::array<FockVector, 2> pair_modes{p, vac};
    MultiModeState pair = apply_beamsplitter(tensor(pair_modes), 0, 1, 0.5);

    std::array<FockVector, 4> modes{p, vac, r, vac};
    MultiModeState s = tensor(modes);
    s = apply_beamsplitter(s, 0, 1, 0.5);
    s = attenuate(s, 2, loss.eta1);  // e1
    s = apply_beamsplitter(s, 2, 3, 0.5);
    s = apply_beamsplitter(s, 1, 2, 0.5);
    s = attenuate(s, 1, loss.eta2);  // e2
    s = attenuate(s, 2, loss.eta2);  // e3

    detail::Scenario sc;
    sc.state = std::move(s);
    sc.mode_n = 1;
    sc.mode_m = 2;
    sc.x_mode = 1;
    sc.target = std::move(pair);
    sc.parity = resource_parity(phi_kind);
    sc.z_mode = 1;
    sc.z_alpha = phi.beta / std::numbers::sqrt2;

    ProtocolConfig config;
    config.protocol = "lossy_entanglement_swap";
    config.cutoff = cutoff;
    config.phi = phi;
    config.resource = resource;
    config.eta1 = loss.eta1;
    config.eta2 = loss.eta2;
    config.working_modes = 4;
    config.environment_modes = 3;
    return detail::evaluate(sc, options, std::move(config));
}

std::vector<double> eta_grid(double step, double start) {
    if (!std::isfinite(step) || step <= 0.0 || step > 1.0) {
        throw InputError("eta_grid: step must be in (0, 1]");
    }
    if (!std::isfinite(start) || start < 0.0 || start > 1.0) {
        throw InputError("eta_grid: start must be in [0, 1]");
    }
    std::vector<double> out;
    // Multiply rather than accumulate so 0.05-steps land on round values.
    for (long k = 0;; ++k) {
        double v = start + static_cast<double>(k) * step;
        if (v > 1.0 - 1e-9) {
            break;
        }
        out.push_back(v);
    }
    out.push_back(1.0);
    return out;
}

namespace {

LossCell run_cell(const LossSelector &sel, double eta1, double eta2) {
    LossConfig loss{eta1, eta2};
    ProtocolSummary s = sel.protocol == LossProtocol::teleportation
                            ? run_lossy_teleportation(sel.input, sel.resource, loss, sel.cutoff)
                            : run_lossy_entswap(sel.resource.kind, sel.resource.beta, loss, sel.cutoff);
    return {eta1, eta2, s.average_fidelity_odd, s.success_probability};
}

}  // namespace

LossSweep loss_contour_sweep(const LossSelector &selector, std::span<const double> etas) {
    if (etas.empty()) {
        throw InputError("loss_contour_sweep: empty eta grid");
    }
    for (double e : etas) {
        check_eta(e, "loss_contour_sweep: eta");
    }
    LossSweep sweep;
    sweep.grid.reserve(etas.size() * etas.size());
    for (double e1 : etas) {
        for (double e2 : etas) {
            sweep.grid.push_back(run_cell(selector, e1, e2));
        }
    }
    for (std::size_t k = 0; k < etas.size(); ++k) {
        // Diagonal cells already sit in the grid.
        sweep.diagonal.push_back(sweep.grid[k * etas.size() + k]);
    }
    return sweep;
}

}  // namespace cskit
