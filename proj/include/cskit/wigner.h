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

#ifndef CSKIT_WIGNER_H
#define CSKIT_WIGNER_H

#include <vector>

#include "cskit/fock.h"

namespace cskit {

/// Square lattice over x in [x_min, x_max], p in [p_min, p_max], `steps` points per axis.
struct PhaseGrid {
    double x_min = -5.0;
    double x_max = 5.0;
    double p_min = -5.0;
    double p_max = 5.0;
    int steps = 201;

    void validate() const;
    double dx() const;
    double dp() const;
    double x(int i) const;
    double p(int j) const;
};

/// <m| D(gamma) |n> for the untruncated displacement operator.
Complex displacement_element(int m, int n, Complex gamma);

/// W(x, p) = (1/pi) sum_n (-1)^n <n| D^dag(a) rho D(a) |n>, a = (x + i p) / sqrt 2.
///
/// A coherent state |beta> peaks at x = sqrt(2) Re beta; W integrates to
/// tr(rho) over dx dp. `rho` must be single-mode.
double wigner_point(const DensityMatrix &rho, double x, double p);

struct WignerSurface {
    PhaseGrid grid;
    /// Row-major over (x index, p index).
    std::vector<double> values;

    double at(int ix, int ip) const {
        return values[static_cast<std::size_t>(ix) * static_cast<std::size_t>(grid.steps) +
                      static_cast<std::size_t>(ip)];
    }
    /// Riemann sum of W dx dp.
    double integral() const;
};

WignerSurface wigner_grid(const DensityMatrix &rho, const PhaseGrid &grid);

}  // namespace cskit

#endif
