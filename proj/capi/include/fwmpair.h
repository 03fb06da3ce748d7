/* C interface of the fwmpair shared library.
 *
 * The library models photon-pair generation by intermodal spontaneous
 * four-wave mixing in a two-mode step-index fiber. Scalar design queries
 * work through an opaque fiber handle; the Monte-Carlo experiments run
 * through fwm_run() driven by the same key/value configuration the CLI
 * uses, writing CSV tables into an output directory.
 *
 * All functions returning fwm_status leave outputs untouched on failure;
 * fwm_last_error() describes the most recent failure on the calling
 * thread.
 */

#ifndef FWMPAIR_H
#define FWMPAIR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fwm_status {
    FWM_OK = 0,
    FWM_ERR_INVALID = 1,     /* invalid argument or configuration */
    FWM_ERR_NO_SOLUTION = 2, /* no phase-matched root in the search band */
    FWM_ERR_NUMERIC = 3,     /* solver or convergence failure */
    FWM_ERR_IO = 4           /* file system failure */
} fwm_status;

const char* fwm_status_name(fwm_status status);

/* Message for the last failing call on this thread; empty string if none. */
const char* fwm_last_error(void);

/* Library version as "major.minor.patch". */
const char* fwm_version(void);

/* --- fiber handle ----------------------------------------------------- */

typedef struct fwm_fiber fwm_fiber;

/* radius_um in [2.7, 8.25], ge_mole_fraction in [0, 0.10]; NULL on error
 * (see fwm_last_error). */
fwm_fiber* fwm_fiber_create(double radius_um, double ge_mole_fraction);
void fwm_fiber_destroy(fwm_fiber* fiber);

/* Core/cladding refractive index difference at lambda_um. */
fwm_status fwm_index_step(const fwm_fiber* fiber, double lambda_um, double* out);

/* Normalized frequency V at lambda_um. */
fwm_status fwm_v_number(const fwm_fiber* fiber, double lambda_um, double* out);

/* Effective index of a guided mode; mode 0 = LP01, 1 = LP11. */
fwm_status fwm_mode_neff(const fwm_fiber* fiber, int mode, double lambda_um, double* out);

/* LP11 cutoff wavelength [um]. */
fwm_status fwm_lp11_cutoff(const fwm_fiber* fiber, double* lambda_um);

/* Phase-matched sideband wavelengths [um] for a pump at lambda_p_um.
 * Returns FWM_ERR_NO_SOLUTION when no root lies in the search band. */
fwm_status fwm_phase_match(const fwm_fiber* fiber, double lambda_p_um, double* lambda_s_um,
                           double* lambda_i_um);

/* Full-collision setup for Gaussian pumps of duration t_p_s: pump launch
 * separation [s] and fiber length [m]. */
fwm_status fwm_collision_setup(const fwm_fiber* fiber, double lambda_p_um, double t_p_s,
                               double* separation_s, double* length_m);

/* Heralded single-photon purity of the unperturbed source (sigma = 0).
 * grid_n must be a power of two; 0 selects the default 512. */
fwm_status fwm_sigma0_purity(const fwm_fiber* fiber, double lambda_p_um, double t_p_s,
                             int grid_n, double* purity);

/* --- design search ---------------------------------------------------- */

/* Core radius maximizing the phase-matched signal wavelength for the given
 * doping, plus that wavelength. */
fwm_status fwm_stable_radius(double ge_mole_fraction, double lambda_p_um, double* radius_um,
                             double* lambda_pm_um);

/* --- experiment driver ------------------------------------------------ */

/* Runs one experiment. config_pairs holds n_pairs strings of the form
 * "key=value"; keys are documented in the project README. Output tables
 * and the resolved configuration are written under out_dir. */
fwm_status fwm_run(const char* const* config_pairs, int n_pairs, const char* out_dir);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FWMPAIR_H */
