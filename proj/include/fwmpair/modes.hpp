#pragma once

#include <optional>
#include <stdexcept>

#include "fwmpair/material.hpp"

namespace fwmpair::modes {

// Step-index fiber geometry: core radius [um] plus core composition.
struct FiberGeometry {
    double core_radius_um = 0.0;
    material::GlassComposition composition{};

    // Design sweep range, relaxed +-10% for fluctuation evaluation.
    static constexpr double kRadiusMin = 3.0 * 0.9;
    static constexpr double kRadiusMax = 7.5 * 1.1;
};

// Only the two guided mode families used by the pair source.
enum class LPMode { LP01, LP11 };

// Azimuthal order of the characteristic equation.
inline int azimuthal_order(LPMode m) { return m == LPMode::LP01 ? 0 : 1; }

struct ModeSolution {
    double beta_rad_per_m = 0.0;   // propagation constant
    double n_eff = 0.0;
    double u = 0.0;                // core transverse parameter
    double w = 0.0;                // cladding decay parameter
    double v = 0.0;                // normalized frequency at this wavelength
    double n_core = 0.0;
    double n_clad = 0.0;
    double core_radius_um = 0.0;
    LPMode mode = LPMode::LP01;
};

class ModeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// V = (2 pi / lambda) a sqrt(n_core^2 - n_clad^2).
double v_number(const FiberGeometry& geom, double lambda_um);

// Solve the LP characteristic equation for the fundamental radial branch.
// Throws ModeError when the mode is below cutoff or bracketing fails.
ModeSolution solve_mode(const FiberGeometry& geom, LPMode mode, double lambda_um);

// Residual of the characteristic equation at a solution (diagnostic).
double characteristic_residual(const ModeSolution& s);

// Largest wavelength at which LP11 still satisfies V >= 2.405, found by
// bisection to 0.1 nm. LP01 has no cutoff and raises ModeError.
double cutoff_wavelength(const FiberGeometry& geom, LPMode mode);

// Normalized transverse profile value at radius r (um), azimuthal factor
// excluded. Continuous across the core boundary.
double radial_profile(const ModeSolution& s, double r_um);

// Nonlinear mode overlap f = integral F_p F_s* F_q F_i* dA with each
// |F_j|^2 normalized to unit integral; returns 1/m^2. The azimuthal
// selection integral is evaluated analytically.
double nonlinear_overlap(const ModeSolution& p, const ModeSolution& s,
                         const ModeSolution& q, const ModeSolution& i);

}  // namespace fwmpair::modes
