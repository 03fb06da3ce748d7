#include "fwmpair/phasematch.hpp"

#include <cassert>
#include <cmath>
#include <vector>

#include "fwmpair/constants.hpp"

namespace fwmpair::phasematch {

FieldAssignment FieldAssignment::make(double lambda_p_um, double detuning_rad_s,
                                      SidebandPairing pairing) {
    FieldAssignment f;
    f.omega_p = omega_from_lambda_um(lambda_p_um);
    f.omega_s = f.omega_p - detuning_rad_s;
    f.omega_i = f.omega_p + detuning_rad_s;
    if (pairing == SidebandPairing::SignalLP11IdlerLP01) {
        f.mode_s = modes::LPMode::LP11;
        f.mode_i = modes::LPMode::LP01;
    } else {
        f.mode_s = modes::LPMode::LP01;
        f.mode_i = modes::LPMode::LP11;
    }
    return f;
}

namespace {

double beta_at(const modes::FiberGeometry& geom, modes::LPMode mode, double omega) {
    return modes::solve_mode(geom, mode, lambda_um_from_omega(omega)).beta_rad_per_m;
}

}  // namespace

DispersionCoefficients dispersion_coefficients(const modes::FiberGeometry& geom,
                                               modes::LPMode mode, double omega) {
    DispersionCoefficients d;
    d.beta0 = beta_at(geom, mode, omega);

    // Central differences with Richardson combination. The root solver
    // resolves beta to ~1e-9 rad/m, which dominates the beta2 estimate for
    // small steps, so step refinement walks upward from the initial
    // 2 pi * 50 GHz until consecutive Richardson values agree to 1e-6.
    const double h0 = 2.0 * kPi * 50e9;
    double cache[17][2];  // beta at omega +- n*h0 for n = 1,2,4,8,16
    bool have[17] = {};
    auto beta_off = [&](int n) {  // n > 0: offset n*h0; sign handled by caller
        if (!have[n]) {
            cache[n][0] = beta_at(geom, mode, omega + n * h0);
            cache[n][1] = beta_at(geom, mode, omega - n * h0);
            have[n] = true;
        }
        return n;
    };
    auto d1 = [&](int n) {
        beta_off(n);
        return (cache[n][0] - cache[n][1]) / (2.0 * n * h0);
    };
    auto d2 = [&](int n) {
        beta_off(n);
        const double h = n * h0;
        return (cache[n][0] - 2.0 * d.beta0 + cache[n][1]) / (h * h);
    };
    auto richardson = [](double coarse, double fine) { return (4.0 * fine - coarse) / 3.0; };

    bool ok1 = false, ok2 = false;
    double r1_prev = richardson(d1(2), d1(1));
    double r2_prev = richardson(d2(2), d2(1));
    for (int n = 2; n <= 8 && !(ok1 && ok2); n *= 2) {
        const double r1 = richardson(d1(2 * n), d1(n));
        const double r2 = richardson(d2(2 * n), d2(n));
        if (!ok1 && std::fabs(r1 - r1_prev) <= 1e-6 * std::fabs(r1)) {
            d.beta1 = r1;
            ok1 = true;
        }
        if (!ok2 && std::fabs(r2 - r2_prev) <= 1e-6 * std::fabs(r2)) {
            d.beta2 = r2;
            ok2 = true;
        }
        r1_prev = r1;
        r2_prev = r2;
    }
    if (!ok1 || !ok2) {
        throw ConvergenceError("dispersion coefficients did not converge after 4 refinements");
    }
    return d;
}

double phase_mismatch(const modes::FiberGeometry& geom, const FieldAssignment& f) {
    return beta_at(geom, f.mode_p, f.omega_p) + beta_at(geom, f.mode_q, f.omega_p) -
           beta_at(geom, f.mode_s, f.omega_s) - beta_at(geom, f.mode_i, f.omega_i);
}

double phase_mismatch_parabolic(double beta1_lp01, double beta1_lp11, double beta2_lp01,
                                double beta2_lp11, double detuning) {
    return (beta1_lp01 - beta1_lp11 + 0.5 * (beta2_lp01 + beta2_lp11) * detuning) * detuning;
}

std::optional<PhaseMatchResult> solve_phase_matched_signal(const modes::FiberGeometry& geom,
                                                           double lambda_p_um,
                                                           SidebandPairing pairing) {
    constexpr int kScan = 120;
    auto mismatch = [&](double detuning) -> std::optional<double> {
        try {
            return phase_mismatch(geom, FieldAssignment::make(lambda_p_um, detuning, pairing));
        } catch (const modes::ModeError&) {
            return std::nullopt;  // a field fell below cutoff at this detuning
        } catch (const material::BandError&) {
            return std::nullopt;
        }
    };

    double best = -1.0;
    double prev_x = kDetuningMin;
    std::optional<double> prev = mismatch(prev_x);
    for (int i = 1; i <= kScan; ++i) {
        const double x = kDetuningMin + (kDetuningMax - kDetuningMin) * i / kScan;
        const std::optional<double> cur = mismatch(x);
        if (prev && cur && *prev * *cur < 0.0) {
            double a = prev_x, b = x, fa = *prev;
            while (b - a > 1.0) {  // rad/s; far below the 1e-3 rad/m mismatch target
                const double mid = 0.5 * (a + b);
                const auto fm = mismatch(mid);
                if (!fm) break;
                if (fa * *fm <= 0.0) {
                    b = mid;
                } else {
                    a = mid;
                    fa = *fm;
                }
            }
            const double root = 0.5 * (a + b);
            const auto res = mismatch(root);
            if (res && std::fabs(*res) < 1e-3) best = std::max(best, root);
        }
        prev_x = x;
        prev = cur;
    }
    if (best < 0.0) return std::nullopt;
    PhaseMatchResult r;
    r.detuning = best;
    const double omega_p = omega_from_lambda_um(lambda_p_um);
    r.lambda_s_um = lambda_um_from_omega(omega_p - best);
    r.lambda_i_um = lambda_um_from_omega(omega_p + best);
    return r;
}

StableRadiusResult find_stable_radius(const material::GlassComposition& x, double lambda_p_um) {
    constexpr double kLo = 3.0, kHi = 7.5;
    auto lambda_pm = [&](double a) -> double {
        const auto r = solve_phase_matched_signal({a, x}, lambda_p_um);
        return r ? r->lambda_s_um : -1.0;
    };

    // Coarse scan to bracket the maximum, then golden-section refinement.
    constexpr int kCoarse = 45;
    int best_i = -1;
    double best_v = -1.0;
    std::vector<double> vals(kCoarse + 1);
    for (int i = 0; i <= kCoarse; ++i) {
        const double a = kLo + (kHi - kLo) * i / kCoarse;
        vals[i] = lambda_pm(a);
        if (vals[i] > best_v) {
            best_v = vals[i];
            best_i = i;
        }
    }
    if (best_v < 0.0) throw std::runtime_error("no phase-matched solution anywhere in radius range");
    if (best_i == 0 || best_i == kCoarse) {
        throw std::runtime_error("stable radius: maximum on sweep boundary");
    }
    double lo = kLo + (kHi - kLo) * (best_i - 1) / kCoarse;
    double hi = kLo + (kHi - kLo) * (best_i + 1) / kCoarse;

    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c1 = hi - gr * (hi - lo), c2 = lo + gr * (hi - lo);
    double f1 = lambda_pm(c1), f2 = lambda_pm(c2);
    while (hi - lo > 0.01) {
        if (f1 < f2) {
            lo = c1;
            c1 = c2;
            f1 = f2;
            c2 = lo + gr * (hi - lo);
            f2 = lambda_pm(c2);
        } else {
            hi = c2;
            c2 = c1;
            f2 = f1;
            c1 = hi - gr * (hi - lo);
            f1 = lambda_pm(c1);
        }
    }
    StableRadiusResult r;
    r.radius_um = 0.5 * (lo + hi);
    r.lambda_pm_um = lambda_pm(r.radius_um);
    return r;
}

double factorability_residual(double t_p, double t_q, double beta1_p, double beta1_q,
                              double beta1_s, double beta1_i) {
    return t_q * t_q * (beta1_p - beta1_i) * (beta1_p - beta1_s) +
           t_p * t_p * (beta1_q - beta1_i) * (beta1_q - beta1_s);
}

bool raman_window_check(double lambda_p_um, double lambda_sideband_um) {
    const double f_p = kSpeedOfLight / (lambda_p_um * kMicron);
    const double f_s = kSpeedOfLight / (lambda_sideband_um * kMicron);
    return std::fabs(f_p - f_s) > 32e12;
}

double stability_ratio(const modes::FiberGeometry& geom, double sigma_a_um, double t_p_s,
                       double lambda_p_um, SidebandPairing pairing) {
    constexpr double kStep = 0.01;  // um
    auto omega_pm = [&](double a) {
        modes::FiberGeometry g = geom;
        g.core_radius_um = a;
        const auto r = solve_phase_matched_signal(g, lambda_p_um, pairing);
        // Derivatives of the phase-matched frequency need the root at each
        // perturbed radius.
        if (!r) throw std::runtime_error("stability_ratio: phase-matched root lost at perturbed radius");
        return omega_from_lambda_um(r->lambda_s_um);
    };
    const double a0 = geom.core_radius_um;
    const double wm = omega_pm(a0 - kStep), w0 = omega_pm(a0), wp = omega_pm(a0 + kStep);
    const double d1 = (wp - wm) / (2.0 * kStep);
    const double d2 = (wp - 2.0 * w0 + wm) / (kStep * kStep);
    return d1 * sigma_a_um * t_p_s + 0.5 * d2 * sigma_a_um * sigma_a_um * t_p_s;
}

double collision_length(double t_p_s, double beta1_p, double beta1_q) {
    const double d = std::fabs(beta1_p - beta1_q);
    if (d < 1e-18) throw std::invalid_argument("collision_length: degenerate group velocities");
    return t_p_s / d;
}

}  // namespace fwmpair::phasematch
