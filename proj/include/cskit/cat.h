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

#ifndef CSKIT_CAT_H
#define CSKIT_CAT_H

#include <span>
#include <vector>

#include "cskit/fock.h"

namespace cskit {

enum class Parity { even, odd };

/// Squeezing strength r >= 0.
class SqueezeParam {
   public:
    explicit SqueezeParam(double r);
    double r() const {
        return r_;
    }

   private:
    double r_;
};

/// N(|beta> +- |-beta>) for real beta >= 0 (+ for even, - for odd).
///
/// Built from the Fock expansion, so beta = 0 gives |0> (even) or |1> (odd).
FockVector cat_state(double beta, Parity parity, int cutoff);

/// S_r|0>: only even photon numbers, amplitudes (tanh r)^n sqrt((2n)!) / (sqrt(cosh r) 2^n n!).
FockVector squeezed_vacuum(SqueezeParam r, int cutoff);

/// S_r|1>: only odd photon numbers, amplitudes (tanh r)^n sqrt((2n+1)!) / ((cosh r)^{3/2} 2^n n!).
FockVector squeezed_single_photon(SqueezeParam r, int cutoff);

/// Squeezing that maximizes F(S_r|1>, odd cat of amplitude beta).
SqueezeParam r_opt(double beta);
/// Squeezing that maximizes F(S_r|0>, even cat of amplitude beta).
SqueezeParam r_opt_v(double beta);

/// a|psi>, renormalized. Throws InputError if the result vanishes.
FockVector annihilate(const FockVector &state);

struct ApproxRow {
    double beta;
    double r;
    double fidelity;
};

/// Fidelity between the cat of each beta and its squeezed approximation at
/// the closed-form optimal squeezing (odd: S|1> with r_opt, even: S|0> with r_opt_v).
std::vector<ApproxRow> approximation_fidelity_sweep(Parity kind, std::span<const double> betas, int cutoff);

}  // namespace cskit

#endif
