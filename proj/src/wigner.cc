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

#include "cskit/wigner.h"

#include <cmath>
#include <numbers>

#include "cskit/errors.h"

namespace cskit {

void PhaseGrid::validate() const {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(p_min) || !std::isfinite(p_max)) {
        throw InputError("PhaseGrid: bounds must be finite");
    }
    if (!(x_min < x_max) || !(p_min < p_max)) {
        throw InputError("PhaseGrid: empty range");
    }
    if (steps < 2) {
        throw InputError("PhaseGrid: steps must be >= 2");
    }
}

double PhaseGrid::dx() const {
    return (x_max - x_min) / (steps - 1);
}
double PhaseGrid::dp() const {
    return (p_max - p_min) / (steps - 1);
}
double PhaseGrid::x(int i) const {
    return i == steps - 1 ? x_max : x_min + i * dx();
}
double PhaseGrid::p(int j) const {
    return j == steps - 1 ? p_max : p_min + j * dp();
}

namespace {

// sqrt(n!/(n+d)!) |g|^d e^{-|g|^2/2}, in log space so large |g| cannot overflow.
double displacement_prefactor(int n, int d, double abs_g) {
    if (abs_g == 0.0) {
        return d == 0 ? 1.0 : 0.0;
    }
    double lg = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + d + 1.0)) + d * std::log(abs_g) - 0.5 * abs_g * abs_g;
    return std::exp(lg);
}

// Full (N+1)x(N+1) block of D(gamma), column-major by (k, l) -> k + l*(N+1).
void displacement_block(int cutoff, Complex gamma, std::vector<Complex> &out) {
    const int d1 = cutoff + 1;
    out.assign(static_cast<std::size_t>(d1) * d1, 0.0);
    const double r = std::abs(gamma);
    const double x = r * r;
    const double phase = std::arg(gamma);
    std::vector<double> lag(static_cast<std::size_t>(d1));
    for (int d = 0; d <= cutoff; ++d) {
        // L_n^{(d)}(x) by the forward three-term recurrence.
        int top = cutoff - d;
        lag[0] = 1.0;
        if (top >= 1) {
            lag[1] = 1.0 + d - x;
        }
        for (int n = 1; n < top; ++n) {
            lag[n + 1] = ((2.0 * n + 1.0 + d - x) * lag[n] - (n + d) * lag[n - 1]) / (n + 1.0);
        }
        Complex up = std::polar(1.0, d * phase);                            // (g/|g|)^d
        Complex down = std::polar(1.0, d * (std::numbers::pi - phase));     // (-g*/|g|)^d
        for (int n = 0; n <= top; ++n) {
            double mag = displacement_prefactor(n, d, r) * lag[n];
            out[static_cast<std::size_t>(n + d) + static_cast<std::size_t>(n) * d1] = mag * up;
            if (d > 0) {
                out[static_cast<std::size_t>(n) + static_cast<std::size_t>(n + d) * d1] = mag * down;
            }
        }
    }
}

}  // namespace

Complex displacement_element(int m, int n, Complex gamma) {
    if (m < 0 || n < 0) {
        throw InputError("displacement_element: negative index");
    }
    const double r = std::abs(gamma);
    if (m >= n) {
        int d = m - n;
        double l = std::assoc_laguerre(static_cast<unsigned>(n), static_cast<unsigned>(d), r * r);
        return displacement_prefactor(n, d, r) * l * std::polar(1.0, d * std::arg(gamma));
    }
    int d = n - m;
    double l = std::assoc_laguerre(static_cast<unsigned>(m), static_cast<unsigned>(d), r * r);
    return displacement_prefactor(m, d, r) * l * std::polar(1.0, d * (std::numbers::pi - std::arg(gamma)));
}

namespace {

double wigner_with(const DensityMatrix &rho, int cutoff, double x, double p, std::vector<Complex> &block) {
    // D(a) P D(a)^dag = D(2a) P, so only one displacement is needed.
    Complex two_a = Complex(x, p) * std::numbers::sqrt2;
    displacement_block(cutoff, two_a, block);
    const int d1 = cutoff + 1;
    Complex acc = 0.0;
    for (int l = 0; l < d1; ++l) {
        Complex col = 0.0;
        for (int k = 0; k < d1; ++k) {
            col += rho(static_cast<std::size_t>(l), static_cast<std::size_t>(k)) *
                   block[static_cast<std::size_t>(k) + static_cast<std::size_t>(l) * d1];
        }
        acc += (l % 2 == 0) ? col : -col;
    }
    return acc.real() / std::numbers::pi;
}

}  // namespace

double wigner_point(const DensityMatrix &rho, double x, double p) {
    if (!std::isfinite(x) || !std::isfinite(p)) {
        throw InputError("wigner_point: non-finite phase-space point");
    }
    std::vector<Complex> block;
    return wigner_with(rho, rho.cutoff(), x, p, block);
}

double WignerSurface::integral() const {
    double s = 0.0;
    for (double v : values) {
        s += v;
    }
    return s * grid.dx() * grid.dp();
}

WignerSurface wigner_grid(const DensityMatrix &rho, const PhaseGrid &grid) {
    grid.validate();
    const int cutoff = rho.cutoff();
    WignerSurface w{grid, {}};
    w.values.resize(static_cast<std::size_t>(grid.steps) * static_cast<std::size_t>(grid.steps));
    std::vector<Complex> block;
    for (int i = 0; i < grid.steps; ++i) {
        for (int j = 0; j < grid.steps; ++j) {
            w.values[static_cast<std::size_t>(i) * grid.steps + j] = wigner_with(rho, cutoff, grid.x(i), grid.p(j), block);
        }
    }
    return w;
}

}  // namespace cskit
