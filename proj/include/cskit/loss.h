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

#ifndef CSKIT_LOSS_H
#define CSKIT_LOSS_H

#include <cstddef>
#include <span>
#include <vector>

#include "cskit/fock.h"
#include "cskit/protocols.h"

namespace cskit {

/// eta1: transmitivity after the resource source. eta2: detector efficiency.
struct LossConfig {
    double eta1 = 1.0;
    double eta2 = 1.0;

    void validate() const;
};

/// Couples `mode` to a fresh vacuum mode (appended last) on a beamsplitter of
/// transmitivity eta. The environment mode is kept as a purification.
MultiModeState attenuate(const MultiModeState &state, std::size_t mode, double eta);

/// Teleporter with source loss on the resource and loss before both detectors.
///
/// Mode layout: a, b, c, then environments for the source, detector a and
/// detector b. The input is rebuilt at amplitude sqrt(eta1) * alpha to match
/// the attenuated resource.
ProtocolSummary run_lossy_teleportation(const InputSpec &input, const ResourceSpec &resource, LossConfig loss,
                                        int cutoff = 6, const RunOptions &options = {});

/// Entanglement swap with loss on the resource arm and the detectors; modes
/// a and d are lossless. phi and resource share `phi_kind`; phi is built at
/// amplitude sqrt(eta1) * beta, the resource at beta.
ProtocolSummary run_lossy_entswap(ResourceKind phi_kind, double beta, LossConfig loss, int cutoff = 5,
                                  const RunOptions &options = {});

enum class LossProtocol { teleportation, entanglement_swap };

struct LossSelector {
    LossProtocol protocol = LossProtocol::teleportation;
    /// Teleportation only; alpha is the unattenuated amplitude.
    InputSpec input;
    /// For entanglement swapping, resource.kind is also the kind of phi.
    ResourceSpec resource;
    int cutoff = 6;
};

struct LossCell {
    double eta1;
    double eta2;
    double fidelity;
    double success_probability;
};

struct LossSweep {
    std::vector<LossCell> grid;
    std::vector<LossCell> diagonal;
};

/// start, start+step, ..., 1 (1 always included).
std::vector<double> eta_grid(double step = 0.05, double start = 0.05);

/// Every (eta1, eta2) pair of `etas` (eta1-major), plus the eta1 == eta2 slice.
LossSweep loss_contour_sweep(const LossSelector &selector, std::span<const double> etas);

}  // namespace cskit

#endif
