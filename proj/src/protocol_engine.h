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


#ifndef CSKIT_SRC_PROTOCOL_ENGINE_H
#define CSKIT_SRC_PROTOCOL_ENGINE_H

#include <cstddef>
#include <optional>

#include "cskit/cat.h"
#include "cskit/fock.h"
#include "cskit/protocols.h"

namespace cskit::detail {

// Outcomes this unlikely carry only rounding noise and get no fidelity.
inline constexpr double kNegligibleProbability = 1e-300;

/// Everything needed to score one circuit run.
struct Scenario {
    MultiModeState state = MultiModeState::scalar(1.0);
    std::size_t mode_n = 0;
    std::size_t mode_m = 1;
    /// Mode (after removing the detector modes) that receives the X phase.
    std::size_t x_mode = 0;
    /// Target over the leading modes of the post-measurement state.
    MultiModeState target = MultiModeState::scalar(1.0);
    Parity parity = Parity::odd;
    /// Target mode and qubit amplitude for the Pauli-frame Z.
    std::size_t z_mode = 0;
    double z_alpha = 0.0;
};

MultiModeState pauli_frame_z(const MultiModeState &target, std::size_t mode, double alpha);

ProtocolSummary evaluate(const Scenario &scenario, const RunOptions &options, ProtocolConfig config);

}  // namespace cskit::detail

#endif
