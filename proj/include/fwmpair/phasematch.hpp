#pragma once

#include <optional>

#include "fwmpair/constants.hpp"
#include "fwmpair/modes.hpp"

namespace fwmpair::phasematch {

// Which spatial mode carries the red-shifted signal photon. The intermodal
// scheme phase-matches with the signal in LP11 and the idler in LP01; the
// swapped arrangement is kept selectable for diagnostics (it admits no
// phase-matched root in the search band for these fibers).
enum class SidebandPairing {
    SignalLP11IdlerLP01,  // default
    SignalLP01IdlerLP11,
};

// The four interacting fields. Role p is the LP01 pump, role q the LP11
// pump; both share the pump frequency. Energy conservation
// 2 w_p = w_s + w_i holds exactly by construction.
struct FieldAssignment {
    modes::LPMode mode_p = modes::LPMode::LP01;
    modes::LPMode mode_q = modes::LPMode::LP11;
    modes::LPMode mode_s = modes::LPMode::LP11;
    modes::LPMode mode_i = modes::LPMode::LP01;
    double omega_p = 0.0;  // rad/s, shared by both pumps
    double omega_s = 0.0;  // red sideband, omega_s < omega_p
    double omega_i = 0.0;  // blue sideband, omega_i > omega_p

    static FieldAssignment make(double lambda_p_um, double detuning_rad_s,
                                SidebandPairing pairing = SidebandPairing::SignalLP11IdlerLP01);
};

// Taylor coefficients of beta(omega) at a field's central frequency.
struct DispersionCoefficients {
    double beta0 = 0.0;  // rad/m
    double beta1 = 0.0;  // s/m
    double beta2 = 0.0;  // s^2/m
};

class ConvergenceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// beta0 from the mode solver; beta1/beta2 by Richardson-refined central
// differences, initial step 2 pi * 50 GHz, relative convergence 1e-6.
DispersionCoefficients dispersion_coefficients(const modes::FiberGeometry& geom,
                                               modes::LPMode mode, double omega);

// Full (non-Taylor) phase mismatch
// beta_p(w_p) + beta_q(w_p) - beta_s(w_s) - beta_i(w_i), all four modes
// solved at the given geometry.
double phase_mismatch(const modes::FiberGeometry& geom, const FieldAssignment& fields);

// Parabolic approximation in the pump-idler detuning. Diagnostic only;
// the sweep solvers use the full mismatch.
double phase_mismatch_parabolic(double beta1_lp01, double beta1_lp11,
                                double beta2_lp01, double beta2_lp11, double detuning);

struct PhaseMatchResult {
    double detuning = 0.0;  // Omega = w_i - w_p, rad/s
    double lambda_s_um = 0.0;
    double lambda_i_um = 0.0;
};

// Search band for the nontrivial root.
inline constexpr double kDetuningMin = 2.0 * kPi * 1.0e12;   // rad/s
inline constexpr double kDetuningMax = 2.0 * kPi * 60.0e12;  // rad/s

// Solve phase matching for the signal frequency; returns the largest root
// in the band, or nullopt when no root exists there.
std::optional<PhaseMatchResult> solve_phase_matched_signal(
    const modes::FiberGeometry& geom, double lambda_p_um,
    SidebandPairing pairing = SidebandPairing::SignalLP11IdlerLP01);

struct StableRadiusResult {
    double radius_um = 0.0;
    double lambda_pm_um = 0.0;
};

// Radius maximizing the phase-matched signal wavelength, golden-section
// refined to 0.01 um. Throws when the maximum sits on the sweep boundary.
StableRadiusResult find_stable_radius(const material::GlassComposition& x, double lambda_p_um);

// Factorability criterion residual
// T_q^2 (b1p - b1i)(b1p - b1s) + T_p^2 (b1q - b1i)(b1q - b1s); zero for a
// factorable joint state under full collision.
double factorability_residual(double t_p, double t_q, double beta1_p, double beta1_q,
                              double beta1_s, double beta1_i);

// True iff the sideband sits strictly more than 32 THz from the pump.
bool raman_window_check(double lambda_p_um, double lambda_sideband_um);

// Ratio of phase-matched-frequency fluctuation to joint-state spectral
// width, to second order in sigma_a.
double stability_ratio(const modes::FiberGeometry& geom, double sigma_a_um, double t_p_s,
                       double lambda_p_um = 1.064,
                       SidebandPairing pairing = SidebandPairing::SignalLP11IdlerLP01);

// Pump-pump collision length T_p / |b1p - b1q|.
double collision_length(double t_p_s, double beta1_p, double beta1_q);

}  // namespace fwmpair::phasematch
