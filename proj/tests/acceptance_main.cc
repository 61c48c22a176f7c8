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

// Acceptance checks, one line per criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "cskit/beamsplitter.h"
#include "cskit/cat.h"
#include "cskit/fock.h"
#include "cskit/loss.h"
#include "cskit/protocols.h"
#include "cskit/wigner.h"
#include "oracles.h"

using namespace cskit;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string &what) {
        if (!cond) {
            if (ok) {
                detail = what;
            }
            ok = false;
        }
    }
};

std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

std::vector<double> range(double start, double stop, double step) {
    std::vector<double> out;
    for (long k = 0;; ++k) {
        double v = start + static_cast<double>(k) * step;
        if (v > stop + 1e-9) {
            break;
        }
        out.push_back(v);
    }
    return out;
}

Check criterion1() {
    Check c;
    double r1 = r_opt(1.0).r();
    c.require(r1 >= 0.305 && r1 <= 0.320, fmt("r_opt(1) = %.6f", r1));
    double worst = 0.0;
    const int cutoff = 100;
    for (double beta : range(0.0, 1.5, 0.05)) {
        FockVector odd = cat_state(beta, Parity::odd, cutoff);
        FockVector even = cat_state(beta, Parity::even, cutoff);
        double a = oracle::golden_max(
            [&](double r) { return fidelity(odd, squeezed_single_photon(SqueezeParam(r), cutoff)); }, 0.0, 2.0);
        double b = oracle::golden_max(
            [&](double r) { return fidelity(even, squeezed_vacuum(SqueezeParam(r), cutoff)); }, 0.0, 2.0);
        worst = std::max({worst, std::abs(a - r_opt(beta).r()), std::abs(b - r_opt_v(beta).r())});
    }
    c.require(worst < 1e-4, fmt("max |closed form - numeric argmax| = %.3g", worst));
    if (c.ok) {
        c.detail = fmt("r_opt(1) = %.6f, max argmax gap %.2g", r1, worst);
    }
    return c;
}

Check criterion2() {
    Check c;
    auto odd = approximation_fidelity_sweep(Parity::odd, range(0.0, 1.2, 0.01), 15);
    auto even = approximation_fidelity_sweep(Parity::even, range(0.0, 0.75, 0.01), 15);
    double odd_min = 1.0, even_min = 1.0, odd_at = 0.0, even_at = 0.0;
    for (const auto &r : odd) {
        if (r.fidelity < odd_min) {
            odd_min = r.fidelity;
            odd_at = r.beta;
        }
    }
    for (const auto &r : even) {
        if (r.fidelity < even_min) {
            even_min = r.fidelity;
            even_at = r.beta;
        }
    }
    c.require(odd_min > 0.99, fmt("odd: F = %.6f at beta = %.2f", odd_min, odd_at));
    c.require(even_min > 0.99, fmt("even: F = %.6f at beta = %.2f", even_min, even_at));
    if (c.ok) {
        c.detail = fmt("min odd F %.6f, min even F %.6f", odd_min, even_min);
    }
    return c;
}

Check criterion3() {
    Check c;
    std::mt19937_64 rng(0xC57);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0, worst_p = 0.0;
    for (double alpha : {0.3, 0.5, 0.8}) {
        ResourceSpec res{ResourceKind::ideal_odd_cat, kSqrt2 * alpha};
        for (int k = 0; k < 10; ++k) {
            double theta = std::acos(1.0 - 2.0 * u(rng));
            double phi = 2.0 * std::numbers::pi * u(rng);
            InputSpec in = InputSpec::superposition(std::cos(theta / 2), std::polar(std::sin(theta / 2), phi), alpha);
            RunOptions opt;
            opt.include_even = true;  // Z outcomes scored against the Pauli-frame target
            ProtocolSummary s = run_teleportation(in, res, 30, opt);
            for (const auto &o : s.outcomes) {
                if (o.accepted && o.fidelity) {
                    worst = std::max(worst, 1.0 - *o.fidelity);
                }
            }
        }
        ProtocolSummary cat = run_teleportation(InputSpec::odd_cat(alpha), res, 30);
        worst_p = std::max(worst_p, std::abs(1.0 - cat.success_probability));
    }
    c.require(worst <= 1e-8, fmt("worst per-outcome infidelity %.3g", worst));
    c.require(worst_p <= 1e-10, fmt("odd-cat success probability off by %.3g", worst_p));
    if (c.ok) {
        c.detail = fmt("worst infidelity %.2g, success deviation %.2g", worst, worst_p);
    }
    return c;
}

Check criterion4() {
    Check c;
    const int n = 20;
    Complex mu(0.6, 0.1), nu(-0.3, 0.7);
    double worst = 0.0;
    for (double alpha : {0.3, 0.6}) {
        MultiModeState got = build_teleporter_input(QubitSuperposition{mu, nu, alpha}.state(n),
                                                    cat_state(kSqrt2 * alpha, Parity::odd, n));
        std::vector<oracle::CoherentTerm> terms;
        for (auto [uu, cu] : {std::pair<double, Complex>{alpha, mu}, {-alpha, nu}}) {
            for (auto [v, cv] : {std::pair<double, double>{alpha, 1.0}, {-alpha, -1.0}}) {
                terms.push_back({cu * cv, {(uu + v) / kSqrt2, (uu - v) / kSqrt2, v}});
            }
        }
        worst = std::max(worst, 1.0 - fidelity(oracle::coherent_superposition(terms, n), got));
    }
    c.require(worst < 1e-8, fmt("infidelity %.3g", worst));
    c.detail = c.ok ? fmt("worst infidelity %.2g", worst) : c.detail;
    return c;
}

Check criterion5() {
    Check c;
    auto families = success_probability_families();
    std::vector<ResourceKind> kinds{ResourceKind::squeezed_single_photon, ResourceKind::ideal_odd_cat};
    auto rows = success_probability_sweep(families, kinds, range(0.1, 1.2, 0.05));
    double p_min = 1.0, both_max = 0.0;
    for (const auto &r : rows) {
        if (r.resource == ResourceKind::squeezed_single_photon) {
            p_min = std::min(p_min, r.success_probability);
        } else {
            both_max = std::max(both_max, r.both_nonzero_probability);
        }
    }
    c.require(p_min > 0.5, fmt("min success probability %.6f", p_min));
    c.require(both_max < 1e-10, fmt("ideal both-nonzero weight %.3g", both_max));
    c.detail = c.ok ? fmt("min P %.6f, ideal both-nonzero %.2g", p_min, both_max) : c.detail;
    return c;
}

Check criterion6() {
    Check c;
    std::vector<InputSpec> inputs{InputSpec::squeezed_single_photon(0), InputSpec::squeezed_vacuum(0),
                                  InputSpec::coherent(0), InputSpec::odd_cat(0), InputSpec::even_cat(0)};
    double worst = 1.0, worst_beta = 0.0;
    for (double beta : range(0.05, 1.2, 0.05)) {
        for (const auto &in : inputs) {
            double f = run_teleportation(in.with_alpha(beta / kSqrt2), {ResourceKind::squeezed_single_photon, beta})
                           .average_fidelity_odd;
            if (f < worst) {
                worst = f;
                worst_beta = beta;
            }
        }
    }
    c.require(worst > 0.99, fmt("S|1> resource: F = %.6f at beta = %.2f", worst, worst_beta));
    std::vector<double> tail = range(0.55, 0.7, 0.05);
    for (const auto &in : inputs) {
        bool drops = false;
        for (double beta : tail) {
            double f = run_teleportation(in.with_alpha(beta / kSqrt2), {ResourceKind::squeezed_vacuum, beta})
                           .average_fidelity_odd;
            drops = drops || f < 0.99;
        }
        c.require(drops, "S|0> resource stays above 0.99 on (0.5, 0.7] for input " + std::string(to_string(in.kind)));
    }
    c.detail = c.ok ? fmt("S|1> min F %.6f (beta %.2f); S|0> drops below 0.99 in (0.5, 0.7]", worst, worst_beta)
                    : c.detail;
    return c;
}

Check criterion7() {
    Check c;
    double worst = 1.0, worst_beta = 0.0;
    for (double beta : range(0.05, 1.2, 0.05)) {
        ResourceSpec r{ResourceKind::squeezed_single_photon, beta};
        double f = run_entanglement_swap(r, r).average_fidelity_odd;
        if (f < worst) {
            worst = f;
            worst_beta = beta;
        }
    }
    c.require(worst > 0.99, fmt("S|1>: F = %.6f at beta = %.2f", worst, worst_beta));
    double vac_worst = 1.0;
    for (double beta : range(0.05, 0.45, 0.05)) {
        ResourceSpec r{ResourceKind::squeezed_vacuum, beta};
        vac_worst = std::min(vac_worst, run_entanglement_swap(r, r).average_fidelity_odd);
    }
    c.require(vac_worst > 0.99, fmt("S|0>: F = %.6f below 0.99 for beta <= 0.45", vac_worst));
    double edge = -1.0;
    for (double beta : range(0.46, 0.55, 0.01)) {
        ResourceSpec r{ResourceKind::squeezed_vacuum, beta};
        if (run_entanglement_swap(r, r).average_fidelity_odd < 0.99) {
            edge = beta;
            break;
        }
    }
    c.require(edge > 0.0, "S|0>: no drop below 0.99 in (0.45, 0.55]");
    c.detail = c.ok ? fmt("S|1> min F %.6f; S|0> min F %.6f up to 0.45, drops at %.2f", worst, vac_worst, edge)
                    : c.detail;
    return c;
}

Check criterion8() {
    Check c;
    double alpha = 0.5;
    ResourceSpec res{ResourceKind::squeezed_single_photon, kSqrt2 * alpha};
    double f_sq = run_lossy_teleportation(InputSpec::squeezed_single_photon(alpha), res, {1e-3, 1.0}).average_fidelity_odd;
    double f_coh = run_lossy_teleportation(InputSpec::coherent(alpha), res, {1e-3, 1.0}).average_fidelity_odd;
    c.require(f_sq < 0.05, fmt("matched S|1> input at eta1=1e-3: F = %.6f", f_sq));
    c.require(f_coh > 0.95, fmt("coherent input at eta1=1e-3: F = %.6f", f_coh));

    double gap = 0.0;
    auto compare = [&](const ProtocolSummary &a, const ProtocolSummary &b) {
        for (std::size_t k = 0; k < a.outcomes.size(); ++k) {
            gap = std::max(gap, std::abs(a.outcomes[k].probability - b.outcomes[k].probability));
        }
        gap = std::max(gap, std::abs(a.average_fidelity_odd - b.average_fidelity_odd));
    };
    for (const InputSpec &in : {InputSpec::squeezed_single_photon(alpha), InputSpec::coherent(alpha),
                                InputSpec::odd_cat(alpha), InputSpec::even_cat(alpha)}) {
        compare(run_lossy_teleportation(in, res, {1.0, 1.0}), run_teleportation(in, res, 6));
    }
    for (ResourceKind k : {ResourceKind::squeezed_single_photon, ResourceKind::squeezed_vacuum}) {
        compare(run_lossy_entswap(k, 0.5, {1.0, 1.0}), run_entanglement_swap({k, 0.5}, {k, 0.5}, 5));
    }
    c.require(gap <= 1e-10, fmt("lossless reduction gap %.3g", gap));

    RunOptions pt;
    pt.fidelity_method = FidelityMethod::partial_trace;
    double pur = 0.0;
    auto agree = [&](const ProtocolSummary &a, const ProtocolSummary &b) {
        for (std::size_t k = 0; k < a.outcomes.size(); ++k) {
            if (a.outcomes[k].fidelity) {
                pur = std::max(pur, std::abs(*a.outcomes[k].fidelity - *b.outcomes[k].fidelity));
            }
        }
    };
    for (LossConfig l : {LossConfig{0.9, 0.9}, LossConfig{0.5, 0.8}, LossConfig{0.2, 0.6}}) {
        for (const InputSpec &in : {InputSpec::squeezed_single_photon(alpha), InputSpec::coherent(alpha)}) {
            agree(run_lossy_teleportation(in, res, l, 5), run_lossy_teleportation(in, res, l, 5, pt));
        }
        for (ResourceKind k : {ResourceKind::squeezed_single_photon, ResourceKind::squeezed_vacuum}) {
            agree(run_lossy_entswap(k, 0.5, l, 5), run_lossy_entswap(k, 0.5, l, 5, pt));
        }
    }
    c.require(pur <= 1e-10, fmt("purification vs partial trace gap %.3g", pur));
    c.detail = c.ok ? fmt("F(S|1>) %.4f, F(coherent) %.6f, reduction gap %.2g", f_sq, f_coh, gap) +
                          fmt(", purification gap %.2g", pur)
                    : c.detail;
    return c;
}

Check criterion9() {
    Check c;
    double alpha = 0.5;
    ResourceSpec ideal{ResourceKind::ideal_odd_cat, kSqrt2 * alpha};
    ResourceSpec approx{ResourceKind::squeezed_single_photon, kSqrt2 * alpha};
    double worst = 0.0, at = 0.0;
    for (double eta : range(0.1, 1.0, 0.1)) {
        LossConfig l{eta, eta};
        std::array<double, 3> f{
            run_lossy_teleportation(InputSpec::odd_cat(alpha), ideal, l).average_fidelity_odd,
            run_lossy_teleportation(InputSpec::odd_cat(alpha), approx, l).average_fidelity_odd,
            run_lossy_teleportation(InputSpec::squeezed_single_photon(alpha), approx, l).average_fidelity_odd};
        double spread = *std::max_element(f.begin(), f.end()) - *std::min_element(f.begin(), f.end());
        if (spread > worst) {
            worst = spread;
            at = eta;
        }
    }
    c.require(worst < 0.01, fmt("pairwise gap %.4g at eta = %.1f", worst, at));
    c.detail = c.ok ? fmt("max pairwise gap %.3g (eta %.1f)", worst, at) : c.detail;
    return c;
}

Check criterion10() {
    Check c;
    const int cutoff = 30;
    PhaseGrid full;
    double worst_int = 0.0;
    for (const FockVector &f : {cat_state(1.0, Parity::odd, cutoff), cat_state(2.0, Parity::odd, cutoff),
                                squeezed_single_photon(r_opt(1.0), cutoff), coherent_state(1.0, cutoff),
                                fock_basis_state(1, cutoff)}) {
        worst_int = std::max(worst_int, std::abs(wigner_grid(DensityMatrix::pure(f), full).integral() - 1.0));
    }
    c.require(worst_int < 1e-3, fmt("grid integral off by %.3g", worst_int));

    double w0 = wigner_point(DensityMatrix::pure(fock_basis_state(1, cutoff)), 0.0, 0.0);
    c.require(std::abs(w0 + 1.0 / std::numbers::pi) <= 1e-6, fmt("W(0,0) for |1> = %.8f", w0));

    double beta = 1.0;
    WignerSurface coh = wigner_grid(DensityMatrix::pure(coherent_state(beta, cutoff)), full);
    auto peak = std::max_element(coh.values.begin(), coh.values.end()) - coh.values.begin();
    double px = full.x(static_cast<int>(peak / full.steps)), pp = full.p(static_cast<int>(peak % full.steps));
    c.require(std::abs(px - kSqrt2 * beta) <= full.dx() && std::abs(pp) <= full.dp(),
              fmt("coherent peak at (%.3f, %.3f)", px, pp));

    PhaseGrid inner{-4, 4, -4, 4, 161};
    WignerSurface cat = wigner_grid(DensityMatrix::pure(cat_state(1.0, Parity::odd, cutoff)), inner);
    WignerSurface sq = wigner_grid(DensityMatrix::pure(squeezed_single_photon(r_opt(1.0), cutoff)), inner);
    double diff = 0.0;
    for (std::size_t k = 0; k < cat.values.size(); ++k) {
        diff = std::max(diff, std::abs(cat.values[k] - sq.values[k]));
    }
    c.require(diff < 0.02, fmt("max |W_cat - W_sq| = %.4f", diff));
    c.detail = c.ok ? fmt("integral gap %.2g, W(0,0) = %.7f, ", worst_int, w0) +
                          fmt("peak x = %.3f, max surface gap %.4f", px, diff)
                    : c.detail;
    return c;
}

Check criterion11() {
    Check c;
    double bs = 0.0;
    for (double eta : {0.1, 0.5, 0.7, 0.93}) {
        Eigen::MatrixXcd want = oracle::beamsplitter_by_expm(eta, 3, 6);
        Eigen::MatrixXd got = beamsplitter_matrix(eta, 3);
        bs = std::max(bs, (got.cast<Complex>() - want).cwiseAbs().maxCoeff());
    }
    c.require(bs <= 1e-12, fmt("beamsplitter max elementwise gap %.3g", bs));
    double sub = 0.0;
    for (double r : {0.1, 0.31, 0.7}) {
        FockVector a = annihilate(squeezed_vacuum(SqueezeParam(r), 60));
        sub = std::max(sub, 1.0 - fidelity(squeezed_single_photon(SqueezeParam(r), 60), a));
    }
    c.require(sub < 1e-10, fmt("photon subtraction infidelity %.3g", sub));
    c.detail = c.ok ? fmt("beamsplitter gap %.2g, subtraction infidelity %.2g", bs, sub) : c.detail;
    return c;
}

}  // namespace

int main() {
    std::vector<std::function<Check()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                 criterion5, criterion6, criterion7, criterion8,
                                                 criterion9, criterion10, criterion11};
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Check c;
        try {
            c = criteria[k]();
        } catch (const std::exception &e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        failed += c.ok ? 0 : 1;
        std::printf("criterion %2zu: %s  %s\n", k + 1, c.ok ? "PASS" : "FAIL", c.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed;
}
