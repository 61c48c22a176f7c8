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

#include "cskit/cat.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "cskit/errors.h"

namespace cskit {

namespace {

void require_amplitude(double beta, const char *who) {
    if (!std::isfinite(beta) || beta < 0.0) {
        throw InputError(std::string(who) + ": amplitude must be finite and >= 0");
    }
}

FockVector renormalized(std::vector<Complex> amps, double untruncated_norm2) {
    double kept = 0.0;
    for (const auto &a : amps) {
        kept += std::norm(a);
    }
    double leakage = std::max(0.0, 1.0 - kept / untruncated_norm2);
    double scale = 1.0 / std::sqrt(kept);
    for (auto &a : amps) {
        a *= scale;
    }
    return FockVector(std::move(amps), leakage);
}

}  // namespace

SqueezeParam::SqueezeParam(double r) : r_(r) {
    if (!std::isfinite(r) || r < 0.0) {
        throw InputError("SqueezeParam: r must be finite and >= 0");
    }
}

FockVector cat_state(double beta, Parity parity, int cutoff) {
    require_amplitude(beta, "cat_state");
    const int first = parity == Parity::odd ? 1 : 0;
    if (cutoff < first) {
        throw InputError("cat_state: cutoff too small for the requested parity");
    }
    const double b2 = beta * beta;
    if (b2 > (cutoff / 3.0) * (1.0 + 1e-12)) {
        throw TruncationError("cat_state: beta^2 exceeds cutoff/3 for cutoff " + std::to_string(cutoff));
    }
    // Coefficients beta^(k - first) / sqrt(k!); the common factor beta^first is
    // dropped so the odd beta -> 0 limit is |1> rather than 0/0.
    std::vector<Complex> amps(static_cast<std::size_t>(cutoff) + 1);
    double term = 1.0;
    for (int k = first; k <= cutoff; k += 2) {
        amps[static_cast<std::size_t>(k)] = term;
        term *= b2 / std::sqrt(static_cast<double>(k + 1) * static_cast<double>(k + 2));
    }
    double total;
    if (parity == Parity::even) {
        total = std::cosh(b2);
    } else {
        total = b2 == 0.0 ? 1.0 : std::sinh(b2) / b2;
    }
    return renormalized(std::move(amps), total);
}

FockVector squeezed_vacuum(SqueezeParam r, int cutoff) {
    if (cutoff < 0) {
        throw InputError("squeezed_vacuum: negative cutoff");
    }
    const double th = std::tanh(r.r());
    std::vector<Complex> amps(static_cast<std::size_t>(cutoff) + 1);
    double c = 1.0 / std::sqrt(std::cosh(r.r()));
    for (int n = 0; 2 * n <= cutoff; ++n) {
        if (n > 0) {
            c *= th * std::sqrt((2.0 * n - 1.0) / (2.0 * n));
        }
        amps[static_cast<std::size_t>(2 * n)] = c;
    }
    return renormalized(std::move(amps), 1.0);
}

FockVector squeezed_single_photon(SqueezeParam r, int cutoff) {
    if (cutoff < 1) {
        throw InputError("squeezed_single_photon: cutoff must be >= 1");
    }
    const double th = std::tanh(r.r());
    std::vector<Complex> amps(static_cast<std::size_t>(cutoff) + 1);
    double c = std::pow(std::cosh(r.r()), -1.5);
    for (int n = 0; 2 * n + 1 <= cutoff; ++n) {
        if (n > 0) {
            c *= th * std::sqrt((2.0 * n + 1.0) / (2.0 * n));
        }
        amps[static_cast<std::size_t>(2 * n + 1)] = c;
    }
    return renormalized(std::move(amps), 1.0);
}

SqueezeParam r_opt(double beta) {
    require_amplitude(beta, "r_opt");
    double b2 = beta * beta;
    return SqueezeParam(std::log(std::sqrt(2.0 * b2 / 3.0 + std::sqrt(9.0 + 4.0 * b2 * b2) / 3.0)));
}

SqueezeParam r_opt_v(double beta) {
    require_amplitude(beta, "r_opt_v");
    double b2 = beta * beta;
    return SqueezeParam(std::log(std::sqrt(2.0 * b2 + std::sqrt(1.0 + 4.0 * b2 * b2))));
}

FockVector annihilate(const FockVector &state) {
    std::vector<Complex> out(static_cast<std::size_t>(state.cutoff()) + 1);
    for (int n = 0; n < state.cutoff(); ++n) {
        out[static_cast<std::size_t>(n)] = std::sqrt(static_cast<double>(n + 1)) * state[n + 1];
    }
    FockVector lowered(std::move(out));
    if (lowered.norm() == 0.0) {
        throw InputError("annihilate: result is the zero vector");
    }
    return lowered.normalized();
}

std::vector<ApproxRow> approximation_fidelity_sweep(Parity kind, std::span<const double> betas, int cutoff) {
    if (betas.empty()) {
        throw InputError("approximation_fidelity_sweep: empty beta grid");
    }
    std::vector<ApproxRow> rows;
    rows.reserve(betas.size());
    for (double beta : betas) {
        FockVector cat = cat_state(beta, kind, cutoff);
        if (kind == Parity::odd) {
            SqueezeParam r = r_opt(beta);
            rows.push_back({beta, r.r(), fidelity(cat, squeezed_single_photon(r, cutoff))});
        } else {
            SqueezeParam r = r_opt_v(beta);
            rows.push_back({beta, r.r(), fidelity(cat, squeezed_vacuum(r, cutoff))});
        }
    }
    return rows;
}

}  // namespace cskit
