#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "fwmpair/phasematch.hpp"

namespace fwmpair::stochastic {

// Exponentially correlated Gaussian core-radius fluctuation model.
struct FluctuationSpec {
    double sigma_a_um = 0.0;   // absolute standard deviation
    double l_corr_m = 1.0;     // correlation length
    double dz_m = 0.0;         // sampling step; 0 selects the default
    uint64_t seed = 0;

    // Default step resolves both the correlation and the collision region.
    static double default_dz(double l_corr_m, double fiber_length_m) {
        const double dz = std::min(l_corr_m / 10.0, fiber_length_m / 400.0);
        return dz;
    }

    void validate(double fiber_length_m) const;
};

// Core radius samples on a uniform z grid covering [0, L].
struct RadiusProfile {
    double dz_m = 0.0;
    double length_m = 0.0;
    std::vector<double> a_um;  // size >= 2

    double at(std::size_t i) const { return a_um[i]; }
    std::size_t size() const { return a_um.size(); }
};

// AR(1) sampling of the Langevin process; deterministic given the seed.
RadiusProfile sample_profile(const FluctuationSpec& spec, double a0_um, double length_m);

// Same sampler without the dz <= l_corr/4 resolution guard; the alpha -> 0
// limit tests drive it with dz >> l_corr.
RadiusProfile sample_profile_unchecked(double sigma_a_um, double l_corr_m, double dz_m,
                                       uint64_t seed, double a0_um, double length_m);

// Tabulated beta1 per field role and the aggregate mismatch
// dbeta0(a) = b0p + b0q - b0s - b0i, cubic-spline interpolated over a
// radius window. dbeta0 is tabulated as a single difference; the ~1e7 rad/m
// individual terms would cancel catastrophically if stored separately.
class DispersionLookup {
  public:
    // Window nodes must be strictly increasing. Arrays are per node.
    DispersionLookup(std::vector<double> radius_nodes_um, std::vector<double> dbeta0,
                     std::array<std::vector<double>, 4> beta1_per_role);

    double window_min() const { return nodes_.front(); }
    double window_max() const { return nodes_.back(); }

    double dbeta0_at(double a_um) const;
    // role: 0 = p, 1 = q, 2 = s, 3 = i
    double beta1_at(int role, double a_um) const;

  private:
    struct Spline {
        std::vector<double> y, m;  // values and second derivatives
    };
    double eval(const Spline& s, double a_um) const;

    std::vector<double> nodes_;
    Spline dbeta0_;
    std::array<Spline, 4> beta1_;
};

class WindowError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Build the lookup over [a0 - half_window, a0 + half_window]. Throws
// ModeError if any field loses guidance inside the window.
DispersionLookup build_lookup(const modes::FiberGeometry& geom,
                              const phasematch::FieldAssignment& fields, double half_window_um,
                              int n_nodes = 41);

// Per-position dispersion arrays evaluated on a profile grid.
struct DispersionRecord {
    double dz_m = 0.0;
    double length_m = 0.0;
    std::array<std::vector<double>, 4> beta1;  // per role p,q,s,i [s/m]
    std::vector<double> dbeta0;                // [rad/m]

    std::size_t size() const { return dbeta0.size(); }
};

// Evaluate the lookup along a sampled profile. Throws WindowError when a
// profile sample leaves the lookup window (sigma too large for the window).
DispersionRecord profile_to_dispersion(const RadiusProfile& profile,
                                       const DispersionLookup& lookup);

// Constant-dispersion record for the sigma = 0 path.
DispersionRecord uniform_dispersion(double length_m, double dz_m,
                                    const std::array<double, 4>& beta1, double dbeta0);

}  // namespace fwmpair::stochastic
