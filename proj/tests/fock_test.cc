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

#include "cskit/fock.h"

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "cskit/errors.h"
#include "oracles.h"

namespace cskit {
namespace {

MultiModeState random_state(std::mt19937_64 &rng, std::vector<int> cutoffs) {
    std::normal_distribution<double> g;
    std::size_t size = 1;
    for (int c : cutoffs) {
        size *= static_cast<std::size_t>(c) + 1;
    }
    std::vector<Complex> amps(size);
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
    }
    return MultiModeState(std::move(cutoffs), std::move(amps)).normalized();
}

TEST(coherent_state, vacuum_at_zero_amplitude) {
    FockVector v = coherent_state(0.0, 10);
    EXPECT_NEAR(std::abs(v[0]), 1.0, 1e-15);
    for (int n = 1; n <= 10; ++n) {
        EXPECT_EQ(v[n], Complex(0.0));
    }
}

TEST(coherent_state, amplitudes_match_closed_form) {
    FockVector v = coherent_state(1.0, 15);
    ASSERT_LT(v.leakage(), 1e-10);
    // Renormalization factor is within leakage of 1.
    EXPECT_NEAR(v[0].real(), std::exp(-0.5), 1e-10);
    EXPECT_NEAR(v[3].real(), std::exp(-0.5) / std::sqrt(6.0), 1e-10);
    FockVector c = coherent_state({0.3, -0.4}, 12);
    Complex a(0.3, -0.4);
    EXPECT_NEAR(std::abs(c[2] - std::exp(-0.125) * a * a / std::sqrt(2.0)), 0.0, 1e-10);
}

TEST(coherent_state, opposite_amplitudes_nearly_orthogonal) {
    Complex s = overlap(coherent_state(2.0, 15), coherent_state(-2.0, 15));
    EXPECT_LT(std::abs(s), 4e-4);
    Complex wide = overlap(coherent_state(2.0, 50), coherent_state(-2.0, 50));
    EXPECT_NEAR(wide.real(), std::exp(-8.0), 1e-12);
    EXPECT_NEAR(fidelity(coherent_state(2.0, 50), coherent_state(-2.0, 50)), std::exp(-16.0), 1e-14);
}

TEST(coherent_state, guards) {
    EXPECT_THROW(coherent_state(3.0, 15), TruncationError);
    EXPECT_THROW(coherent_state(std::nan(""), 15), InputError);
    EXPECT_THROW(coherent_state(0.1, 0), InputError);
    EXPECT_NO_THROW(coherent_state(std::sqrt(5.0), 15));
}

TEST(fock_basis_state, basics) {
    FockVector one = fock_basis_state(1, 15);
    EXPECT_EQ(one[1], Complex(1.0));
    EXPECT_EQ(overlap(fock_basis_state(1, 5), fock_basis_state(2, 5)), Complex(0.0));
    EXPECT_THROW(fock_basis_state(6, 5), InputError);
    EXPECT_THROW(fock_basis_state(-1, 5), InputError);
    EXPECT_DOUBLE_EQ(fidelity(vacuum(4), fock_basis_state(0, 4)), 1.0);
}

TEST(fidelity, pure_states) {
    FockVector a = coherent_state({0.4, 0.2}, 10);
    EXPECT_NEAR(fidelity(a, a), 1.0, 1e-14);
    EXPECT_EQ(fidelity(vacuum(3), fock_basis_state(1, 3)), 0.0);
    FockVector b = coherent_state(-0.7, 10);
    EXPECT_NEAR(fidelity(a, b), fidelity(b, a), 1e-15);
    EXPECT_THROW(fidelity(vacuum(3), vacuum(4)), InputError);
}

TEST(tensor, product_structure) {
    std::array<FockVector, 2> zz{vacuum(2), vacuum(2)};
    MultiModeState s = tensor(zz);
    EXPECT_EQ(s.size(), 9u);
    EXPECT_EQ(s.amps()[0], Complex(1.0));
    std::mt19937_64 rng(7);
    MultiModeState x = random_state(rng, {2, 3});
    MultiModeState y = random_state(rng, {1});
    MultiModeState xy = tensor(x, y);
    EXPECT_NEAR(xy.norm(), 1.0, 1e-12);
    std::array<int, 3> idx{1, 2, 1};
    std::array<int, 2> ix{1, 2};
    std::array<int, 1> iy{1};
    EXPECT_NEAR(std::abs(xy.at(idx) - x.at(ix) * y.at(iy)), 0.0, 1e-15);
}

TEST(phase_shift, pi_maps_alpha_to_minus_alpha) {
    FockVector a = coherent_state(0.9, 15);
    EXPECT_NEAR(fidelity(coherent_state(-0.9, 15), apply_phase_shift(a, std::numbers::pi)), 1.0, 1e-12);
    FockVector twice = apply_phase_shift(apply_phase_shift(a, std::numbers::pi), std::numbers::pi);
    for (int n = 0; n <= 15; ++n) {
        EXPECT_NEAR(std::abs(twice[n] - a[n]), 0.0, 1e-14);
    }
    FockVector same = apply_phase_shift(a, 0.0);
    EXPECT_EQ(same[4], a[4]);
}

TEST(beamsplitter, coherent_split) {
    const int n = 20;
    std::array<FockVector, 2> in{coherent_state(1.2, n), vacuum(n)};
    MultiModeState out = apply_beamsplitter(tensor(in), 0, 1, 0.5);
    double h = 1.2 / std::numbers::sqrt2;
    std::array<FockVector, 2> expect{coherent_state(h, n), coherent_state(h, n)};
    EXPECT_NEAR(fidelity(tensor(expect), out), 1.0, 1e-10);
}

TEST(beamsplitter, coherent_pairs_recombine) {
    const int n = 20;
    double a = 0.8;
    std::array<FockVector, 2> same{coherent_state(a, n), coherent_state(a, n)};
    std::array<FockVector, 2> opp{coherent_state(a, n), coherent_state(-a, n)};
    std::array<FockVector, 2> e1{coherent_state(std::numbers::sqrt2 * a, n), vacuum(n)};
    std::array<FockVector, 2> e2{vacuum(n), coherent_state(std::numbers::sqrt2 * a, n)};
    EXPECT_NEAR(fidelity(tensor(e1), apply_beamsplitter(tensor(same), 0, 1, 0.5)), 1.0, 1e-10);
    EXPECT_NEAR(fidelity(tensor(e2), apply_beamsplitter(tensor(opp), 0, 1, 0.5)), 1.0, 1e-10);
}

TEST(beamsplitter, odd_cat_forms_bell_pair) {
    const int n = 15;
    double beta = 1.1;
    // Odd cat expansion built directly: beta^(2k+1)/sqrt((2k+1)!).
    std::vector<Complex> amps(n + 1);
    for (int k = 1; k <= n; k += 2) {
        amps[k] = std::pow(beta, k) / std::sqrt(std::tgamma(k + 1.0));
    }
    std::array<FockVector, 2> in{FockVector(amps).normalized(), vacuum(n)};
    MultiModeState out = apply_beamsplitter(tensor(in), 0, 1, 0.5);
    double h = beta / std::numbers::sqrt2;
    MultiModeState bell = oracle::coherent_superposition({{1.0, {h, h}}, {-1.0, {-h, -h}}}, n);
    EXPECT_NEAR(fidelity(bell, out), 1.0, 1e-8);
}

TEST(beamsplitter, full_transmission_is_b_parity) {
    std::mt19937_64 rng(11);
    MultiModeState s = random_state(rng, {3, 3});
    MultiModeState out = apply_beamsplitter(s, 0, 1, 1.0);
    for (int a = 0; a <= 3; ++a) {
        for (int b = 0; b <= 3; ++b) {
            std::array<int, 2> i{a, b};
            EXPECT_NEAR(std::abs(out.at(i) - (b % 2 ? -1.0 : 1.0) * s.at(i)), 0.0, 1e-15);
        }
    }
}

TEST(beamsplitter, preserves_norm_on_representable_sectors) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (int cutoff : {1, 2, 4, 7}) {
        for (double eta : {0.0, 0.13, 0.5, 0.9, 1.0}) {
            // Support on total photon number <= cutoff.
            std::vector<Complex> amps(static_cast<std::size_t>((cutoff + 1) * (cutoff + 1)));
            for (int a = 0; a <= cutoff; ++a) {
                for (int b = 0; a + b <= cutoff; ++b) {
                    amps[a * (cutoff + 1) + b] = {g(rng), g(rng)};
                }
            }
            MultiModeState s = MultiModeState({cutoff, cutoff}, amps).normalized();
            EXPECT_NEAR(apply_beamsplitter(s, 0, 1, eta).norm(), 1.0, 1e-12) << cutoff << " " << eta;
        }
    }
}

TEST(beamsplitter, is_its_own_inverse) {
    std::mt19937_64 rng(5);
    for (double eta : {0.2, 0.5, 0.77}) {
        MultiModeState s = random_state(rng, {4, 4, 2});
        MultiModeState back = apply_beamsplitter(apply_beamsplitter(s, 0, 1, eta), 0, 1, eta);
        // Sectors above the cutoff are projected, so compare on the
        // representable ones only.
        std::vector<Complex> low(s.size()), low_back(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            int a = static_cast<int>(i / 15), b = static_cast<int>((i / 3) % 5);
            if (a + b <= 4) {
                low[i] = s.amps()[i];
                low_back[i] = back.amps()[i];
            }
        }
        MultiModeState x({4, 4, 2}, low), y({4, 4, 2}, low_back);
        EXPECT_GT(fidelity(x, y), 1.0 - 1e-10);
    }
}

TEST(beamsplitter, matches_generator_exponential) {
    std::mt19937_64 rng(17);
    for (int cutoff : {1, 2, 3}) {
        for (double eta : {0.1, 0.5, 0.8}) {
            Eigen::MatrixXcd u = oracle::beamsplitter_by_expm(eta, cutoff, 2 * cutoff);
            MultiModeState s = random_state(rng, {cutoff, cutoff});
            Eigen::VectorXcd v(static_cast<Eigen::Index>(s.size()));
            for (std::size_t i = 0; i < s.size(); ++i) {
                v(static_cast<Eigen::Index>(i)) = s.amps()[i];
            }
            Eigen::VectorXcd expect = u * v;
            MultiModeState got = apply_beamsplitter(s, 0, 1, eta);
            for (std::size_t i = 0; i < s.size(); ++i) {
                EXPECT_NEAR(std::abs(got.amps()[i] - expect(static_cast<Eigen::Index>(i))), 0.0, 1e-12);
            }
        }
    }
}

TEST(beamsplitter, nonadjacent_modes_act_per_slice) {
    std::mt19937_64 rng(23);
    MultiModeState s = random_state(rng, {2, 3, 2});
    MultiModeState out = apply_beamsplitter(s, 0, 2, 0.3);
    for (int k = 0; k <= 3; ++k) {
        std::vector<Complex> slice(9);
        for (int a = 0; a <= 2; ++a) {
            for (int c = 0; c <= 2; ++c) {
                std::array<int, 3> i{a, k, c};
                slice[a * 3 + c] = s.at(i);
            }
        }
        MultiModeState two = apply_beamsplitter(MultiModeState({2, 2}, slice), 0, 1, 0.3);
        for (int a = 0; a <= 2; ++a) {
            for (int c = 0; c <= 2; ++c) {
                std::array<int, 3> i{a, k, c};
                EXPECT_NEAR(std::abs(out.at(i) - two.amps()[a * 3 + c]), 0.0, 1e-14);
            }
        }
    }
    EXPECT_THROW(apply_beamsplitter(s, 0, 1, 0.5), InputError);
    EXPECT_THROW(apply_beamsplitter(s, 0, 0, 0.5), InputError);
    EXPECT_THROW(apply_beamsplitter(s, 0, 2, 1.5), InputError);
}

TEST(projection, completeness) {
    std::mt19937_64 rng(29);
    MultiModeState s = random_state(rng, {3, 2, 4});
    double total = 0.0;
    for (int n = 0; n <= 3; ++n) {
        for (int m = 0; m <= 2; ++m) {
            std::array<ModeCount, 2> c{ModeCount{0, n}, ModeCount{1, m}};
            Projection p = project_photon_number(s, c);
            total += p.probability;
            ASSERT_TRUE(p.state);
            EXPECT_EQ(p.state->num_modes(), 1u);
            EXPECT_NEAR(p.state->norm(), 1.0, 1e-12);
        }
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
}

TEST(projection, single_photon_and_zero_probability) {
    std::array<ModeCount, 1> c{ModeCount{0, 1}};
    Projection p = project_photon_number(to_multimode(fock_basis_state(1, 3)), c);
    EXPECT_NEAR(p.probability, 1.0, 1e-15);
    ASSERT_TRUE(p.state);
    EXPECT_EQ(p.state->num_modes(), 0u);
    std::array<ModeCount, 1> c2{ModeCount{0, 2}};
    Projection q = project_photon_number(to_multimode(fock_basis_state(1, 3)), c2);
    EXPECT_EQ(q.probability, 0.0);
    EXPECT_FALSE(q.state);
    std::array<ModeCount, 1> bad{ModeCount{0, 4}};
    EXPECT_THROW(project_photon_number(to_multimode(vacuum(3)), bad), InputError);
    std::array<ModeCount, 1> bad_mode{ModeCount{1, 0}};
    EXPECT_THROW(project_photon_number(to_multimode(vacuum(3)), bad_mode), InputError);
}

TEST(partial_trace, product_state_is_pure) {
    FockVector psi = coherent_state({0.3, 0.5}, 6);
    std::array<FockVector, 2> in{psi, fock_basis_state(2, 6)};
    DensityMatrix rho = partial_trace(tensor(in), 0);
    EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0.0, 1e-12);
    for (int i = 0; i <= 6; ++i) {
        for (int j = 0; j <= 6; ++j) {
            EXPECT_NEAR(std::abs(rho(i, j) - psi[i] * std::conj(psi[j])), 0.0, 1e-14);
        }
    }
    EXPECT_NEAR(fidelity(psi, rho), 1.0, 1e-12);
}

TEST(partial_trace, split_single_photon_is_maximally_mixed) {
    std::array<FockVector, 2> in{fock_basis_state(1, 3), vacuum(3)};
    DensityMatrix rho = partial_trace(apply_beamsplitter(tensor(in), 0, 1, 0.5), 1);
    EXPECT_NEAR(rho(0, 0).real(), 0.5, 1e-14);
    EXPECT_NEAR(rho(1, 1).real(), 0.5, 1e-14);
    EXPECT_NEAR(std::abs(rho(0, 1)), 0.0, 1e-14);
}

TEST(partial_trace, hermitian_unit_trace_psd) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        MultiModeState s = random_state(rng, {3, 2, 2});
        std::array<std::size_t, 2> keep{2, 0};
        DensityMatrix rho = partial_trace(s, keep);
        EXPECT_EQ(rho.dim(), 12u);
        EXPECT_NEAR((rho.elems() - rho.elems().adjoint()).norm(), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0.0, 1e-10);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.elems());
        EXPECT_GT(es.eigenvalues().minCoeff(), -1e-10);
    }
}

TEST(reduced_fidelity, equals_partial_trace_route) {
    std::mt19937_64 rng(37);
    MultiModeState s = random_state(rng, {2, 3, 2, 1});
    MultiModeState t = random_state(rng, {2, 3});
    std::array<std::size_t, 2> keep{0, 1};
    EXPECT_NEAR(reduced_fidelity(t, s), fidelity(t, partial_trace(s, keep)), 1e-12);
    EXPECT_THROW(reduced_fidelity(random_state(rng, {3}), s), InputError);
}

TEST(density_matrix, rejects_bad_input) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW(DensityMatrix({1}, m), InputError);
    EXPECT_THROW(DensityMatrix({2}, Eigen::MatrixXcd::Identity(2, 2)), InputError);
}

}  // namespace
}  // namespace cskit
