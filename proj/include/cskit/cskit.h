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

#ifndef CSKIT_CSKIT_H
#define CSKIT_CSKIT_H

/* C interface to cskit. All functions are thread-safe on distinct handles.
 * Functions returning cskit_status leave a message retrievable with
 * cskit_last_error() (per thread) when they fail. Output handles are only
 * written on success and must be released with the matching *_free. */

#include <stddef.h>

#if defined(_WIN32)
#if defined(CSKIT_BUILDING_LIBRARY)
#define CSKIT_API __declspec(dllexport)
#else
#define CSKIT_API __declspec(dllimport)
#endif
#else
#define CSKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cskit_status {
    CSKIT_OK = 0,
    CSKIT_ERROR_INPUT = 1,
    CSKIT_ERROR_TRUNCATION = 2,
    CSKIT_ERROR_CONTRACT = 3,
    CSKIT_ERROR_INTERNAL = 4
} cskit_status;

typedef struct cskit_state cskit_state;
typedef struct cskit_density cskit_density;
typedef struct cskit_summary cskit_summary;

CSKIT_API const char *cskit_version(void);
CSKIT_API const char *cskit_status_string(cskit_status status);
/* Message of the last failed call on this thread, "" if none. */
CSKIT_API const char *cskit_last_error(void);

/* ---- pure states ---- */

CSKIT_API cskit_status cskit_state_coherent(double alpha_re, double alpha_im, int cutoff, cskit_state **out);
CSKIT_API cskit_status cskit_state_fock(int n, int cutoff, cskit_state **out);
/* odd != 0 selects the odd cat. */
CSKIT_API cskit_status cskit_state_cat(double beta, int odd, int cutoff, cskit_state **out);
CSKIT_API cskit_status cskit_state_squeezed_vacuum(double r, int cutoff, cskit_state **out);
CSKIT_API cskit_status cskit_state_squeezed_single_photon(double r, int cutoff, cskit_state **out);
/* Interleaved re/im amplitudes, row-major with mode 0 most significant;
 * len counts doubles. */
CSKIT_API cskit_status cskit_state_from_amplitudes(size_t num_modes, const int *cutoffs, const double *re_im,
                                                   size_t len, cskit_state **out);
/* Leakage of the truncated construction (0 for states built from amplitudes). */
CSKIT_API double cskit_state_leakage(const cskit_state *state);

CSKIT_API cskit_status cskit_state_tensor(const cskit_state *first, const cskit_state *second, cskit_state **out);
CSKIT_API cskit_status cskit_state_beamsplitter(const cskit_state *state, size_t mode_i, size_t mode_j,
                                                double transmitivity, cskit_state **out);
CSKIT_API cskit_status cskit_state_phase_shift(const cskit_state *state, size_t mode, double theta,
                                               cskit_state **out);
/* Loss channel kept as a purification: appends one environment mode. */
CSKIT_API cskit_status cskit_state_attenuate(const cskit_state *state, size_t mode, double eta, cskit_state **out);
/* Projects modes[k] onto photons[k]. *out is set to NULL when the
 * probability is exactly zero. */
CSKIT_API cskit_status cskit_state_project(const cskit_state *state, size_t count, const size_t *modes,
                                           const int *photons, double *probability, cskit_state **out);

CSKIT_API size_t cskit_state_num_modes(const cskit_state *state);
/* -1 on a bad handle or mode. */
CSKIT_API int cskit_state_cutoff(const cskit_state *state, size_t mode);
/* Number of complex amplitudes. */
CSKIT_API size_t cskit_state_size(const cskit_state *state);
/* Copies 2 * size doubles (re, im interleaved) into re_im. */
CSKIT_API cskit_status cskit_state_amplitudes(const cskit_state *state, double *re_im, size_t len);
CSKIT_API void cskit_state_free(cskit_state *state);

/* <t|rho|t> where rho is the reduced state of the leading modes of `state`. */
CSKIT_API cskit_status cskit_fidelity_pure(const cskit_state *target, const cskit_state *state, double *out);

/* ---- density matrices ---- */

CSKIT_API cskit_status cskit_state_partial_trace(const cskit_state *state, size_t count, const size_t *keep_modes,
                                                 cskit_density **out);
CSKIT_API size_t cskit_density_dim(const cskit_density *rho);
/* Row-major, 2 * dim * dim doubles. */
CSKIT_API cskit_status cskit_density_elements(const cskit_density *rho, double *re_im, size_t len);
CSKIT_API cskit_status cskit_fidelity_mixed(const cskit_state *target, const cskit_density *rho, double *out);
CSKIT_API void cskit_density_free(cskit_density *rho);

/* ---- cat approximations ---- */

CSKIT_API cskit_status cskit_r_opt(double beta, double *r);
CSKIT_API cskit_status cskit_r_opt_v(double beta, double *r);
/* Fidelity between the cat of amplitude beta and its squeezed approximation
 * (S|1> for odd, S|0> for even) at the optimal squeezing. */
CSKIT_API cskit_status cskit_approx_fidelity(int odd, double beta, int cutoff, double *r, double *fidelity);

/* ---- protocols ---- */

typedef enum cskit_input_kind {
    CSKIT_INPUT_COHERENT = 0,
    CSKIT_INPUT_ODD_CAT = 1,
    CSKIT_INPUT_EVEN_CAT = 2,
    CSKIT_INPUT_SUPERPOSITION = 3,
    CSKIT_INPUT_SQUEEZED_SINGLE_PHOTON = 4,
    CSKIT_INPUT_SQUEEZED_VACUUM = 5
} cskit_input_kind;

typedef enum cskit_resource_kind {
    CSKIT_RESOURCE_ODD_CAT = 0,
    CSKIT_RESOURCE_EVEN_CAT = 1,
    CSKIT_RESOURCE_SQUEEZED_SINGLE_PHOTON = 2,
    CSKIT_RESOURCE_SQUEEZED_VACUUM = 3
} cskit_resource_kind;

typedef enum cskit_correction {
    CSKIT_CORRECTION_NONE = 0,
    CSKIT_CORRECTION_I = 1,
    CSKIT_CORRECTION_X = 2,
    CSKIT_CORRECTION_Z = 3,
    CSKIT_CORRECTION_XZ = 4
} cskit_correction;

/* mu, nu are only read for CSKIT_INPUT_SUPERPOSITION. */
typedef struct cskit_input_spec {
    int kind;
    double alpha;
    double mu_re, mu_im;
    double nu_re, nu_im;
} cskit_input_spec;

typedef struct cskit_resource_spec {
    int kind;
    double beta;
} cskit_resource_spec;

typedef struct cskit_run_options {
    /* Also average Z/XZ outcomes, Z tracked on the target. */
    int include_even;
    /* Score via an explicit reduced density matrix instead of summing the
     * environment modes. */
    int fidelity_via_partial_trace;
} cskit_run_options;

typedef struct cskit_outcome {
    int n;
    int m;
    double probability;
    int correction;
    int accepted;
    int averaged;
    int has_fidelity;
    double fidelity;
} cskit_outcome;

/* options may be NULL for the defaults. */
CSKIT_API cskit_status cskit_run_teleportation(const cskit_input_spec *input, const cskit_resource_spec *resource,
                                               int cutoff, const cskit_run_options *options, cskit_summary **out);
CSKIT_API cskit_status cskit_run_entanglement_swap(const cskit_resource_spec *phi,
                                                   const cskit_resource_spec *resource, int cutoff,
                                                   const cskit_run_options *options, cskit_summary **out);
CSKIT_API cskit_status cskit_run_lossy_teleportation(const cskit_input_spec *input,
                                                     const cskit_resource_spec *resource, double eta1, double eta2,
                                                     int cutoff, const cskit_run_options *options,
                                                     cskit_summary **out);
CSKIT_API cskit_status cskit_run_lossy_entswap(int phi_kind, double beta, double eta1, double eta2, int cutoff,
                                               const cskit_run_options *options, cskit_summary **out);
/* Outcome (0, m). *present is 0 when that outcome cannot occur. */
CSKIT_API cskit_status cskit_per_outcome_fidelity(const cskit_input_spec *input,
                                                  const cskit_resource_spec *resource, int m, int cutoff,
                                                  int *present, double *fidelity);
/* Success probability with the input rebuilt at alpha = beta / sqrt 2;
 * family->alpha is ignored. */
CSKIT_API cskit_status cskit_success_probability(const cskit_input_spec *family, int resource_kind, double beta,
                                                 int cutoff, double *success, double *both_nonzero);

/* Accessors return NaN / 0 on a NULL handle. */
CSKIT_API double cskit_summary_success_probability(const cskit_summary *s);
CSKIT_API double cskit_summary_average_fidelity(const cskit_summary *s);
CSKIT_API double cskit_summary_both_zero_probability(const cskit_summary *s);
CSKIT_API double cskit_summary_both_nonzero_probability(const cskit_summary *s);
CSKIT_API int cskit_summary_degenerate(const cskit_summary *s);
CSKIT_API size_t cskit_summary_working_modes(const cskit_summary *s);
CSKIT_API size_t cskit_summary_environment_modes(const cskit_summary *s);
CSKIT_API size_t cskit_summary_num_outcomes(const cskit_summary *s);
CSKIT_API cskit_status cskit_summary_outcome(const cskit_summary *s, size_t index, cskit_outcome *out);
CSKIT_API void cskit_summary_free(cskit_summary *s);

/* ---- Wigner function ---- */

/* x = sqrt 2 Re a, p = sqrt 2 Im a; rho must be single-mode. */
CSKIT_API cskit_status cskit_wigner_point(const cskit_density *rho, double x, double p, double *w);
/* steps x steps values, row-major over (x, p); len counts doubles. */
CSKIT_API cskit_status cskit_wigner_grid(const cskit_density *rho, double x_min, double x_max, double p_min,
                                         double p_max, int steps, double *values, size_t len);

#ifdef __cplusplus
}
#endif

#endif
