#include <cmath>

#include "doctest.h"
#include "fwmpair/constants.hpp"
#include "fwmpair/rng.hpp"
#include "fwmpair/stochastic.hpp"

using namespace fwmpair;

namespace {
const material::GlassComposition kDoping{0.067};
}

TEST_CASE("zero fluctuation strength keeps the profile at the target radius") {
    stochastic::FluctuationSpec spec;
    spec.sigma_a_um = 0.0;
    spec.l_corr_m = 1.0;
    spec.seed = 7;
    const auto p = stochastic::sample_profile(spec, 4.0, 2.4);
    for (double a : p.a_um) CHECK(a == 4.0);
    CHECK(p.size() >= 2);
}

TEST_CASE("spec validation") {
    stochastic::FluctuationSpec spec;
    spec.sigma_a_um = -1.0;
    CHECK_THROWS_AS(spec.validate(2.0), std::invalid_argument);
    spec.sigma_a_um = 0.01;
    spec.l_corr_m = 0.0;
    CHECK_THROWS_AS(spec.validate(2.0), std::invalid_argument);
    spec.l_corr_m = 1.0;
    spec.dz_m = 0.3;  // > l_corr/4
    CHECK_THROWS_AS(spec.validate(2.0), std::invalid_argument);
    spec.dz_m = 0.0;
    CHECK_NOTHROW(spec.validate(2.0));
}

TEST_CASE("marginal variance is stationary at sigma^2 and autocorrelation decays as exp(-dz/l_corr)") {
    // 1e4 independent profiles; estimators within 3 standard errors.
    const double sigma = 0.04, l_corr = 1.0, length = 2.4;
    const int n_prof = 10000;
    stochastic::FluctuationSpec spec;
    spec.sigma_a_um = sigma;
    spec.l_corr_m = l_corr;

    const auto probe = stochastic::sample_profile(spec, 4.0, length);
    const std::size_t n = probe.size();
    const std::size_t z_idx[3] = {0, n / 2, n - 1};
    // index distance closest to one correlation length
    const auto lag = static_cast<std::size_t>(std::round(l_corr / probe.dz_m));
    REQUIRE(lag < n);

    double var[3] = {0, 0, 0};
    double cov = 0.0;
    for (int k = 0; k < n_prof; ++k) {
        spec.seed = rng::realization_seed(123, static_cast<uint64_t>(k));
        const auto p = stochastic::sample_profile(spec, 4.0, length);
        for (int j = 0; j < 3; ++j) {
            const double d = p.a_um[z_idx[j]] - 4.0;
            var[j] += d * d;
        }
        cov += (p.a_um[0] - 4.0) * (p.a_um[lag] - 4.0);
    }
    const double s2 = sigma * sigma;
    const double se_var = s2 * std::sqrt(2.0 / n_prof);
    for (int j = 0; j < 3; ++j) {
        CHECK(std::fabs(var[j] / n_prof - s2) < 3.0 * se_var);
    }
    const double expected_cov = s2 * std::exp(-static_cast<double>(lag) * probe.dz_m / l_corr);
    const double se_cov = s2 * std::sqrt(2.0 / n_prof);  // conservative
    CHECK(std::fabs(cov / n_prof - expected_cov) < 3.0 * se_cov);
}

TEST_CASE("profiles are bit-identical for identical seeds and differ otherwise") {
    stochastic::FluctuationSpec spec;
    spec.sigma_a_um = 0.04;
    spec.l_corr_m = 1.0;
    spec.seed = 99;
    const auto p1 = stochastic::sample_profile(spec, 4.0, 2.4);
    const auto p2 = stochastic::sample_profile(spec, 4.0, 2.4);
    REQUIRE(p1.size() == p2.size());
    for (std::size_t i = 0; i < p1.size(); ++i) CHECK(p1.a_um[i] == p2.a_um[i]);
    spec.seed = 100;
    const auto p3 = stochastic::sample_profile(spec, 4.0, 2.4);
    bool differs = false;
    for (std::size_t i = 0; i < p1.size(); ++i) differs |= p1.a_um[i] != p3.a_um[i];
    CHECK(differs);
}

TEST_CASE("alpha -> 0 limit gives i.i.d. normal samples") {
    // dz >> l_corr through the unchecked sampler.
    const double sigma = 0.04;
    const int n_prof = 4000;
    double var = 0.0, cov = 0.0;
    int count = 0;
    for (int k = 0; k < n_prof; ++k) {
        const auto p = stochastic::sample_profile_unchecked(
            sigma, 1e-4, 0.01, rng::realization_seed(7, static_cast<uint64_t>(k)), 4.0, 2.4);
        for (std::size_t i = 0; i + 1 < p.size(); i += 37) {
            const double d0 = p.a_um[i] - 4.0, d1 = p.a_um[i + 1] - 4.0;
            var += d0 * d0;
            cov += d0 * d1;
            ++count;
        }
    }
    const double s2 = sigma * sigma;
    CHECK(std::fabs(var / count - s2) < 4.0 * s2 * std::sqrt(2.0 / count));
    CHECK(std::fabs(cov / count) < 4.0 * s2 / std::sqrt(static_cast<double>(count)));
}

TEST_CASE("dispersion lookup reproduces the direct solve off the nodes") {
    const modes::FiberGeometry g{4.0, kDoping};
    const auto pm = phasematch::solve_phase_matched_signal(g, 1.064);
    REQUIRE(pm.has_value());
    const auto fields = phasematch::FieldAssignment::make(1.064, pm->detuning);
    const double half_window = 6.0 * 0.01 * 4.0;  // 6 sigma at 1% CRF
    const auto lookup = stochastic::build_lookup(g, fields, half_window);

    // Phase matching solved at a0: the aggregate mismatch vanishes there.
    CHECK(std::fabs(lookup.dbeta0_at(4.0)) < 1e-3);

    const modes::LPMode mode_of[4] = {fields.mode_p, fields.mode_q, fields.mode_s, fields.mode_i};
    const double omega_of[4] = {fields.omega_p, fields.omega_p, fields.omega_s, fields.omega_i};
    for (int k = 0; k < 10; ++k) {
        const double a = 4.0 + half_window * (2.0 * rng::uniform(5, 0, k, 2) - 1.0) * 0.97;
        modes::FiberGeometry ga = g;
        ga.core_radius_um = a;
        const double direct = phasematch::phase_mismatch(ga, fields);
        CHECK(std::fabs(lookup.dbeta0_at(a) - direct) < 1e-4);
        for (int r = 0; r < 4; ++r) {
            const double b1 = phasematch::dispersion_coefficients(ga, mode_of[r], omega_of[r]).beta1;
            CHECK(std::fabs(lookup.beta1_at(r, a) - b1) < 1e-4 * 1e-12);  // 1e-4 ps/m
        }
    }
}

TEST_CASE("all four fields stay guided across a 6-sigma window at the stable radius") {
    const modes::FiberGeometry g{4.65, kDoping};
    const auto pm = phasematch::solve_phase_matched_signal(g, 1.064);
    REQUIRE(pm.has_value());
    const auto fields = phasematch::FieldAssignment::make(1.064, pm->detuning);
    CHECK_NOTHROW((void)stochastic::build_lookup(g, fields, 6.0 * 0.01 * 4.65));
}

TEST_CASE("profile-to-dispersion basics") {
    const modes::FiberGeometry g{4.0, kDoping};
    const auto pm = phasematch::solve_phase_matched_signal(g, 1.064);
    const auto fields = phasematch::FieldAssignment::make(1.064, pm->detuning);
    const auto lookup = stochastic::build_lookup(g, fields, 0.25);

    SUBCASE("constant profile maps to constant arrays at the a0 values") {
        stochastic::RadiusProfile prof;
        prof.dz_m = 0.01;
        prof.length_m = 0.1;
        prof.a_um.assign(11, 4.0);
        const auto rec = stochastic::profile_to_dispersion(prof, lookup);
        for (std::size_t i = 0; i < rec.size(); ++i) {
            CHECK(rec.dbeta0[i] == rec.dbeta0[0]);
            for (int r = 0; r < 4; ++r) CHECK(rec.beta1[r][i] == rec.beta1[r][0]);
        }
    }

    SUBCASE("locality: identical prefixes produce identical dispersion prefixes") {
        stochastic::FluctuationSpec spec;
        spec.sigma_a_um = 0.02;
        spec.l_corr_m = 1.0;
        spec.seed = 5;
        auto p1 = stochastic::sample_profile(spec, 4.0, 2.4);
        auto p2 = p1;
        for (std::size_t i = p2.size() / 2; i < p2.size(); ++i) p2.a_um[i] = 4.0;
        const auto r1 = stochastic::profile_to_dispersion(p1, lookup);
        const auto r2 = stochastic::profile_to_dispersion(p2, lookup);
        for (std::size_t i = 0; i < p1.size() / 2; ++i) {
            CHECK(r1.dbeta0[i] == r2.dbeta0[i]);
            CHECK(r1.beta1[0][i] == r2.beta1[0][i]);
        }
    }

    SUBCASE("radius outside the window rejects the profile") {
        stochastic::RadiusProfile prof;
        prof.dz_m = 0.01;
        prof.length_m = 0.02;
        prof.a_um = {4.0, 4.0 + 0.3};  // outside the 0.25 um window
        CHECK_THROWS_AS((void)stochastic::profile_to_dispersion(prof, lookup),
                        stochastic::WindowError);
    }

    SUBCASE("dispersion varies smoothly along sampled profiles") {
        stochastic::FluctuationSpec spec;
        spec.sigma_a_um = 0.04;
        spec.l_corr_m = 1.0;
        spec.seed = 11;
        const auto prof = stochastic::sample_profile(spec, 4.0, 2.4);
        const auto rec = stochastic::profile_to_dispersion(prof, lookup);
        // Lipschitz bound of the lookup over the window, estimated by finite
        // differences on a fine grid.
        double lip = 0.0;
        for (double a = 3.80; a < 4.20; a += 1e-3) {
            lip = std::max(lip, std::fabs(lookup.dbeta0_at(a + 1e-3) - lookup.dbeta0_at(a)) / 1e-3);
        }
        double max_da = 0.0;
        for (std::size_t i = 0; i + 1 < prof.size(); ++i) {
            max_da = std::max(max_da, std::fabs(prof.a_um[i + 1] - prof.a_um[i]));
        }
        for (std::size_t i = 0; i + 1 < rec.size(); ++i) {
            CHECK(std::fabs(rec.dbeta0[i + 1] - rec.dbeta0[i]) <= 1.05 * lip * max_da + 1e-12);
        }
    }
}
