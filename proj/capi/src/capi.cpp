#include "fwmpair.h"

#include <cstring>
#include <new>
#include <string>

#include "fwmpair/harness.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
fwm_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return FWM_OK;
    } catch (const fwmpair::material::BandError& e) {
        set_error(e.what());
        return FWM_ERR_INVALID;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return FWM_ERR_INVALID;
    } catch (const fwmpair::modes::ModeError& e) {
        set_error(e.what());
        return FWM_ERR_NUMERIC;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return FWM_ERR_NUMERIC;
    } catch (const std::exception& e) {
        set_error(e.what());
        return FWM_ERR_NUMERIC;
    }
}

}  // namespace

struct fwm_fiber {
    fwmpair::modes::FiberGeometry geometry;
};

extern "C" {

const char* fwm_status_name(fwm_status status) {
    switch (status) {
        case FWM_OK: return "ok";
        case FWM_ERR_INVALID: return "invalid argument";
        case FWM_ERR_NO_SOLUTION: return "no solution";
        case FWM_ERR_NUMERIC: return "numeric failure";
        case FWM_ERR_IO: return "io failure";
    }
    return "unknown";
}

const char* fwm_last_error(void) { return g_last_error.c_str(); }

const char* fwm_version(void) { return "1.0.0"; }

fwm_fiber* fwm_fiber_create(double radius_um, double ge_mole_fraction) {
    using fwmpair::modes::FiberGeometry;
    if (!(radius_um >= FiberGeometry::kRadiusMin && radius_um <= FiberGeometry::kRadiusMax)) {
        set_error("core radius outside supported range");
        return nullptr;
    }
    if (!(ge_mole_fraction >= 0.0 &&
          ge_mole_fraction <= fwmpair::material::GlassComposition::kMaxFraction)) {
        set_error("ge mole fraction outside validated range [0, 0.10]");
        return nullptr;
    }
    auto* f = new (std::nothrow) fwm_fiber{{radius_um, {ge_mole_fraction}}};
    if (!f) set_error("out of memory");
    return f;
}

void fwm_fiber_destroy(fwm_fiber* fiber) { delete fiber; }

fwm_status fwm_index_step(const fwm_fiber* fiber, double lambda_um, double* out) {
    if (!fiber || !out) {
        set_error("null argument");
        return FWM_ERR_INVALID;
    }
    return guarded([&] {
        *out = fwmpair::material::index_step(fiber->geometry.composition, lambda_um);
    });
}

fwm_status fwm_v_number(const fwm_fiber* fiber, double lambda_um, double* out) {
    if (!fiber || !out) {
        set_error("null argument");
        return FWM_ERR_INVALID;
    }
    return guarded([&] { *out = fwmpair::modes::v_number(fiber->geometry, lambda_um); });
}

fwm_status fwm_mode_neff(const fwm_fiber* fiber, int mode, double lambda_um, double* out) {
    if (!fiber || !out || (mode != 0 && mode != 1)) {
        set_error("null argument or unsupported mode index");
        return FWM_ERR_INVALID;
    }
    return guarded([&] {
        const auto lp = mode == 0 ? fwmpair::modes::LPMode::LP01 : fwmpair::modes::LPMode::LP11;
        *out = fwmpair::modes::solve_mode(fiber->geometry, lp, lambda_um).n_eff;
    });
}

fwm_status fwm_lp11_cutoff(const fwm_fiber* fiber, double* lambda_um) {
    if (!fiber || !lambda_um) {
        set_error("null argument");
        return FWM_ERR_INVALID;
    }
    return guarded([&] {
        *lambda_um = fwmpair::modes::cutoff_wavelength(fiber->geometry,
                                                       fwmpair::modes::LPMode::LP11);
    });
}

fwm_status fwm_phase_match(const fwm_fiber* fiber, double lambda_p_um, double* lambda_s_um,
                           double* lambda_i_um) {
    if (!fiber || !lambda_s_um || !lambda_i_um) {
        set_error("null argument");
        return FWM_ERR_INVALID;
    }
    bool found = false;
    fwmpair::phasematch::PhaseMatchResult pm;
    const fwm_status st = guarded([&] {
        const auto r = fwmpair::phasematch::solve_phase_matched_signal(fiber->geometry, lambda_p_um);
        if (r) {
            pm = *r;
            found = true;
        }
    });
    if (st != FWM_OK) return st;
    if (!found) {
        set_error("no phase-matched root in the search band");
        return FWM_ERR_NO_SOLUTION;
    }
    *lambda_s_um = pm.lambda_s_um;
    *lambda_i_um = pm.lambda_i_um;
    return FWM_OK;
}

fwm_status fwm_collision_setup(const fwm_fiber* fiber, double lambda_p_um, double t_p_s,
                               double* separation_s, double* length_m) {
    if (!fiber || !separation_s || !length_m) {
        set_error("null argument");
        return FWM_ERR_INVALID;
    }
    return guarded([&] {
        const double wp = fwmpair::omega_from_lambda_um(lambda_p_um);
        const auto d01 = fwmpair::phasematch::dispersion_coefficients(
            fiber->geometry, fwmpair::modes::LPMode::LP01, wp);
        const auto d11 = fwmpair::phasematch::dispersion_coefficients(
            fiber->geometry, fwmpair::modes::LPMode::LP11, wp);
        const auto s = fwmpair::jointstate::standard_collision_setup(d01.beta1, d11.beta1, t_p_s,
                                                                     t_p_s);
        *separation_s = s.separation_s;
        *length_m = s.length_m;
    });
}

fwm_status fwm_sigma0_purity(const fwm_fiber* fiber, double lambda_p_um, double t_p_s, int grid_n,
                             double* purity) {
    if (!fiber || !purity) {
        set_error("null argument");
        return FWM_ERR_INVALID;
    }
    return guarded([&] {
        const auto model = fwmpair::harness::SourceModel::create(
            fiber->geometry.core_radius_um, fiber->geometry.composition.ge_mole_fraction,
            lambda_p_um, t_p_s, 1.0, 0.0, grid_n > 0 ? static_cast<std::size_t>(grid_n) : 512);
        *purity = fwmpair::metrics::purity_fast(model.realize_uniform(1.0));
    });
}

fwm_status fwm_stable_radius(double ge_mole_fraction, double lambda_p_um, double* radius_um,
                             double* lambda_pm_um) {
    if (!radius_um || !lambda_pm_um) {
        set_error("null argument");
        return FWM_ERR_INVALID;
    }
    return guarded([&] {
        const auto r = fwmpair::phasematch::find_stable_radius({ge_mole_fraction}, lambda_p_um);
        *radius_um = r.radius_um;
        *lambda_pm_um = r.lambda_pm_um;
    });
}

fwm_status fwm_run(const char* const* config_pairs, int n_pairs, const char* out_dir) {
    if ((!config_pairs && n_pairs > 0) || n_pairs < 0 || !out_dir) {
        set_error("null argument");
        return FWM_ERR_INVALID;
    }
    fwmpair::textio::KeyValues kv;
    for (int i = 0; i < n_pairs; ++i) {
        if (!config_pairs[i]) {
            set_error("null config pair");
            return FWM_ERR_INVALID;
        }
        try {
            kv.merge_line(config_pairs[i]);
        } catch (const std::exception& e) {
            set_error(e.what());
            return FWM_ERR_INVALID;
        }
    }
    return guarded([&] {
        const auto cfg = fwmpair::harness::ExperimentConfig::parse(kv);
        fwmpair::harness::run_experiment(cfg, out_dir);
    });
}

}  // extern "C"
