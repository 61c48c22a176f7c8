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

#include "cskit/cskit.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "cskit/cat.h"
#include "cskit/errors.h"
#include "cskit/fock.h"
#include "cskit/loss.h"
#include "cskit/protocols.h"
#include "cskit/wigner.h"

struct cskit_state {
    cskit::MultiModeState value;
    double leakage = 0.0;
};

struct cskit_density {
    cskit::DensityMatrix value;
};

struct cskit_summary {
    cskit::ProtocolSummary value;
};

namespace {

thread_local std::string last_error;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <typename F>
cskit_status guarded(F &&body) {
    try {
        body();
        last_error.clear();
        return CSKIT_OK;
    } catch (const cskit::TruncationError &e) {
        last_error = e.what();
        return CSKIT_ERROR_TRUNCATION;
    } catch (const cskit::InputError &e) {
        last_error = e.what();
        return CSKIT_ERROR_INPUT;
    } catch (const cskit::ContractError &e) {
        last_error = e.what();
        return CSKIT_ERROR_CONTRACT;
    } catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return CSKIT_ERROR_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return CSKIT_ERROR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return CSKIT_ERROR_INTERNAL;
    }
}

template <typename T>
void require(const T *p, const char *what) {
    if (p == nullptr) {
        throw cskit::InputError(std::string(what) + " is NULL");
    }
}

cskit_state *wrap(const cskit::FockVector &v) {
    return new cskit_state{cskit::to_multimode(v), v.leakage()};
}

cskit::InputSpec to_input(const cskit_input_spec *s) {
    require(s, "input spec");
    if (s->kind < CSKIT_INPUT_COHERENT || s->kind > CSKIT_INPUT_SQUEEZED_VACUUM) {
        throw cskit::InputError("unknown input kind " + std::to_string(s->kind));
    }
    cskit::InputSpec in;
    in.kind = static_cast<cskit::InputKind>(s->kind);
    in.alpha = s->alpha;
    in.mu = {s->mu_re, s->mu_im};
    in.nu = {s->nu_re, s->nu_im};
    return in;
}

cskit::ResourceKind to_resource_kind(int kind) {
    if (kind < CSKIT_RESOURCE_ODD_CAT || kind > CSKIT_RESOURCE_SQUEEZED_VACUUM) {
        throw cskit::InputError("unknown resource kind " + std::to_string(kind));
    }
    return static_cast<cskit::ResourceKind>(kind);
}

cskit::ResourceSpec to_resource(const cskit_resource_spec *s) {
    require(s, "resource spec");
    return {to_resource_kind(s->kind), s->beta};
}

cskit::RunOptions to_options(const cskit_run_options *o) {
    cskit::RunOptions r;
    if (o != nullptr) {
        r.include_even = o->include_even != 0;
        r.fidelity_method =
            o->fidelity_via_partial_trace ? cskit::FidelityMethod::partial_trace : cskit::FidelityMethod::environment_sum;
    }
    return r;
}

void copy_complex(std::span<const cskit::Complex> src, double *dst, std::size_t len) {
    require(dst, "output buffer");
    if (len != 2 * src.size()) {
        throw cskit::InputError("output buffer holds " + std::to_string(len) + " doubles, need " +
                                std::to_string(2 * src.size()));
    }
    for (std::size_t k = 0; k < src.size(); ++k) {
        dst[2 * k] = src[k].real();
        dst[2 * k + 1] = src[k].imag();
    }
}

}  // namespace

extern "C" {

const char *cskit_version(void) {
    return CSKIT_VERSION_STRING;
}

const char *cskit_status_string(cskit_status status) {
    switch (status) {
        case CSKIT_OK:
            return "ok";
        case CSKIT_ERROR_INPUT:
            return "input error";
        case CSKIT_ERROR_TRUNCATION:
            return "truncation error";
        case CSKIT_ERROR_CONTRACT:
            return "contract violation";
        case CSKIT_ERROR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *cskit_last_error(void) {
    return last_error.c_str();
}

cskit_status cskit_state_coherent(double alpha_re, double alpha_im, int cutoff, cskit_state **out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(cskit::coherent_state({alpha_re, alpha_im}, cutoff));
    });
}

cskit_status cskit_state_fock(int n, int cutoff, cskit_state **out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(cskit::fock_basis_state(n, cutoff));
    });
}

cskit_status cskit_state_cat(double beta, int odd, int cutoff, cskit_state **out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(cskit::cat_state(beta, odd ? cskit::Parity::odd : cskit::Parity::even, cutoff));
    });
}

cskit_status cskit_state_squeezed_vacuum(double r, int cutoff, cskit_state **out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(cskit::squeezed_vacuum(cskit::SqueezeParam(r), cutoff));
    });
}

cskit_status cskit_state_squeezed_single_photon(double r, int cutoff, cskit_state **out) {
    return guarded([&] {
        require(out, "out");
        *out = wrap(cskit::squeezed_single_photon(cskit::SqueezeParam(r), cutoff));
    });
}

cskit_status cskit_state_from_amplitudes(size_t num_modes, const int *cutoffs, const double *re_im, size_t len,
                                         cskit_state **out) {
    return guarded([&] {
        require(out, "out");
        if (num_modes > 0) {
            require(cutoffs, "cutoffs");
        }
        if (len % 2 != 0) {
            throw cskit::InputError("amplitude buffer length must be even");
        }
        if (len > 0) {
            require(re_im, "amplitudes");
        }
        std::vector<cskit::Complex> amps(len / 2);
        for (std::size_t k = 0; k < amps.size(); ++k) {
            amps[k] = {re_im[2 * k], re_im[2 * k + 1]};
        }
        std::vector<int> c(cutoffs, cutoffs + num_modes);
        *out = new cskit_state{cskit::MultiModeState(std::move(c), std::move(amps)), 0.0};
    });
}

double cskit_state_leakage(const cskit_state *state) {
    return state ? state->leakage : kNaN;
}

cskit_status cskit_state_tensor(const cskit_state *first, const cskit_state *second, cskit_state **out) {
    return guarded([&] {
        require(first, "first");
        require(second, "second");
        require(out, "out");
        *out = new cskit_state{cskit::tensor(first->value, second->value), std::max(first->leakage, second->leakage)};
    });
}

cskit_status cskit_state_beamsplitter(const cskit_state *state, size_t mode_i, size_t mode_j, double transmitivity,
                                      cskit_state **out) {
    return guarded([&] {
        require(state, "state");
        require(out, "out");
        *out = new cskit_state{cskit::apply_beamsplitter(state->value, mode_i, mode_j, transmitivity), state->leakage};
    });
}

cskit_status cskit_state_phase_shift(const cskit_state *state, size_t mode, double theta, cskit_state **out) {
    return guarded([&] {
        require(state, "state");
        require(out, "out");
        *out = new cskit_state{cskit::apply_phase_shift(state->value, mode, theta), state->leakage};
    });
}

cskit_status cskit_state_attenuate(const cskit_state *state, size_t mode, double eta, cskit_state **out) {
    return guarded([&] {
        require(state, "state");
        require(out, "out");
        *out = new cskit_state{cskit::attenuate(state->value, mode, eta), state->leakage};
    });
}

cskit_status cskit_state_project(const cskit_state *state, size_t count, const size_t *modes, const int *photons,
                                 double *probability, cskit_state **out) {
    return guarded([&] {
        require(state, "state");
        require(probability, "probability");
        require(out, "out");
        if (count > 0) {
            require(modes, "modes");
            require(photons, "photons");
        }
        std::vector<cskit::ModeCount> counts(count);
        for (std::size_t k = 0; k < count; ++k) {
            counts[k] = {modes[k], photons[k]};
        }
        cskit::Projection p = cskit::project_photon_number(state->value, counts);
        *probability = p.probability;
        *out = p.state ? new cskit_state{std::move(*p.state), state->leakage} : nullptr;
    });
}

size_t cskit_state_num_modes(const cskit_state *state) {
    return state ? state->value.num_modes() : 0;
}

int cskit_state_cutoff(const cskit_state *state, size_t mode) {
    if (state == nullptr || mode >= state->value.num_modes()) {
        return -1;
    }
    return state->value.cutoff(mode);
}

size_t cskit_state_size(const cskit_state *state) {
    return state ? state->value.size() : 0;
}

cskit_status cskit_state_amplitudes(const cskit_state *state, double *re_im, size_t len) {
    return guarded([&] {
        require(state, "state");
        copy_complex(state->value.amps(), re_im, len);
    });
}

void cskit_state_free(cskit_state *state) {
    delete state;
}

cskit_status cskit_fidelity_pure(const cskit_state *target, const cskit_state *state, double *out) {
    return guarded([&] {
        require(target, "target");
        require(state, "state");
        require(out, "out");
        *out = cskit::reduced_fidelity(target->value, state->value);
    });
}

cskit_status cskit_state_partial_trace(const cskit_state *state, size_t count, const size_t *keep_modes,
                                       cskit_density **out) {
    return guarded([&] {
        require(state, "state");
        require(out, "out");
        if (count > 0) {
            require(keep_modes, "keep_modes");
        }
        std::vector<std::size_t> keep(keep_modes, keep_modes + count);
        *out = new cskit_density{cskit::partial_trace(state->value, keep)};
    });
}

size_t cskit_density_dim(const cskit_density *rho) {
    return rho ? rho->value.dim() : 0;
}

cskit_status cskit_density_elements(const cskit_density *rho, double *re_im, size_t len) {
    return guarded([&] {
        require(rho, "rho");
        const std::size_t d = rho->value.dim();
        std::vector<cskit::Complex> flat(d * d);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) {
                flat[r * d + c] = rho->value(r, c);
            }
        }
        copy_complex(flat, re_im, len);
    });
}

cskit_status cskit_fidelity_mixed(const cskit_state *target, const cskit_density *rho, double *out) {
    return guarded([&] {
        require(target, "target");
        require(rho, "rho");
        require(out, "out");
        *out = cskit::fidelity(target->value, rho->value);
    });
}

void cskit_density_free(cskit_density *rho) {
    delete rho;
}

cskit_status cskit_r_opt(double beta, double *r) {
    return guarded([&] {
        require(r, "r");
        *r = cskit::r_opt(beta).r();
    });
}

cskit_status cskit_r_opt_v(double beta, double *r) {
    return guarded([&] {
        require(r, "r");
        *r = cskit::r_opt_v(beta).r();
    });
}

cskit_status cskit_approx_fidelity(int odd, double beta, int cutoff, double *r, double *fidelity) {
    return guarded([&] {
        require(r, "r");
        require(fidelity, "fidelity");
        double b[1] = {beta};
        auto rows = cskit::approximation_fidelity_sweep(odd ? cskit::Parity::odd : cskit::Parity::even, b, cutoff);
        *r = rows[0].r;
        *fidelity = rows[0].fidelity;
    });
}

cskit_status cskit_run_teleportation(const cskit_input_spec *input, const cskit_resource_spec *resource, int cutoff,
                                     const cskit_run_options *options, cskit_summary **out) {
    return guarded([&] {
        require(out, "out");
        *out = new cskit_summary{
            cskit::run_teleportation(to_input(input), to_resource(resource), cutoff, to_options(options))};
    });
}

cskit_status cskit_run_entanglement_swap(const cskit_resource_spec *phi, const cskit_resource_spec *resource,
                                         int cutoff, const cskit_run_options *options, cskit_summary **out) {
    return guarded([&] {
        require(out, "out");
        *out = new cskit_summary{
            cskit::run_entanglement_swap(to_resource(phi), to_resource(resource), cutoff, to_options(options))};
    });
}

cskit_status cskit_run_lossy_teleportation(const cskit_input_spec *input, const cskit_resource_spec *resource,
                                           double eta1, double eta2, int cutoff, const cskit_run_options *options,
                                           cskit_summary **out) {
    return guarded([&] {
        require(out, "out");
        *out = new cskit_summary{cskit::run_lossy_teleportation(to_input(input), to_resource(resource), {eta1, eta2},
                                                                cutoff, to_options(options))};
    });
}

cskit_status cskit_run_lossy_entswap(int phi_kind, double beta, double eta1, double eta2, int cutoff,
                                     const cskit_run_options *options, cskit_summary **out) {
    return guarded([&] {
        require(out, "out");
        *out = new cskit_summary{
            cskit::run_lossy_entswap(to_resource_kind(phi_kind), beta, {eta1, eta2}, cutoff, to_options(options))};
    });
}

cskit_status cskit_per_outcome_fidelity(const cskit_input_spec *input, const cskit_resource_spec *resource, int m,
                                        int cutoff, int *present, double *fidelity) {
    return guarded([&] {
        require(present, "present");
        require(fidelity, "fidelity");
        auto f = cskit::per_outcome_fidelity(to_input(input), to_resource(resource), m, cutoff);
        *present = f.has_value() ? 1 : 0;
        *fidelity = f.value_or(kNaN);
    });
}

cskit_status cskit_success_probability(const cskit_input_spec *family, int resource_kind, double beta, int cutoff,
                                       double *success, double *both_nonzero) {
    return guarded([&] {
        require(success, "success");
        require(both_nonzero, "both_nonzero");
        cskit::InputSpec fam[1] = {to_input(family)};
        cskit::ResourceKind kinds[1] = {to_resource_kind(resource_kind)};
        double betas[1] = {beta};
        auto rows = cskit::success_probability_sweep(fam, kinds, betas, cutoff);
        *success = rows[0].success_probability;
        *both_nonzero = rows[0].both_nonzero_probability;
    });
}

double cskit_summary_success_probability(const cskit_summary *s) {
    return s ? s->value.success_probability : kNaN;
}

double cskit_summary_average_fidelity(const cskit_summary *s) {
    return s ? s->value.average_fidelity_odd : kNaN;
}

double cskit_summary_both_zero_probability(const cskit_summary *s) {
    return s ? s->value.both_zero_probability : kNaN;
}

double cskit_summary_both_nonzero_probability(const cskit_summary *s) {
    return s ? s->value.both_nonzero_probability : kNaN;
}

int cskit_summary_degenerate(const cskit_summary *s) {
    return s ? static_cast<int>(s->value.degenerate) : 0;
}

size_t cskit_summary_working_modes(const cskit_summary *s) {
    return s ? s->value.config.working_modes : 0;
}

size_t cskit_summary_environment_modes(const cskit_summary *s) {
    return s ? s->value.config.environment_modes : 0;
}

size_t cskit_summary_num_outcomes(const cskit_summary *s) {
    return s ? s->value.outcomes.size() : 0;
}

cskit_status cskit_summary_outcome(const cskit_summary *s, size_t index, cskit_outcome *out) {
    return guarded([&] {
        require(s, "summary");
        require(out, "out");
        if (index >= s->value.outcomes.size()) {
            throw cskit::InputError("outcome index out of range");
        }
        const auto &r = s->value.outcomes[index];
        out->n = r.n;
        out->m = r.m;
        out->probability = r.probability;
        out->correction = static_cast<int>(r.correction);
        out->accepted = r.accepted ? 1 : 0;
        out->averaged = r.averaged ? 1 : 0;
        out->has_fidelity = r.fidelity.has_value() ? 1 : 0;
        out->fidelity = r.fidelity.value_or(kNaN);
    });
}

void cskit_summary_free(cskit_summary *s) {
    delete s;
}

cskit_status cskit_wigner_point(const cskit_density *rho, double x, double p, double *w) {
    return guarded([&] {
        require(rho, "rho");
        require(w, "w");
        *w = cskit::wigner_point(rho->value, x, p);
    });
}

cskit_status cskit_wigner_grid(const cskit_density *rho, double x_min, double x_max, double p_min, double p_max,
                               int steps, double *values, size_t len) {
    return guarded([&] {
        require(rho, "rho");
        require(values, "values");
        cskit::PhaseGrid g{x_min, x_max, p_min, p_max, steps};
        g.validate();
        std::size_t need = static_cast<std::size_t>(steps) * static_cast<std::size_t>(steps);
        if (len != need) {
            throw cskit::InputError("values buffer holds " + std::to_string(len) + " doubles, need " +
                                    std::to_string(need));
        }
        auto surface = cskit::wigner_grid(rho->value, g);
        std::copy(surface.values.begin(), surface.values.end(), values);
    });
}

}  // extern "C"
