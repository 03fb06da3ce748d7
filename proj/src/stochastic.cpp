#include "fwmpair/stochastic.hpp"

#include <algorithm>
#include <cmath>

#include "fwmpair/rng.hpp"

namespace fwmpair::stochastic {

void FluctuationSpec::validate(double fiber_length_m) const {
    if (sigma_a_um < 0.0) throw std::invalid_argument("sigma_a must be >= 0");
    if (l_corr_m <= 0.0) throw std::invalid_argument("l_corr must be > 0");
    const double dz = dz_m > 0.0 ? dz_m : default_dz(l_corr_m, fiber_length_m);
    if (dz <= 0.0) throw std::invalid_argument("dz must be > 0");
    if (dz > l_corr_m / 4.0) throw std::invalid_argument("dz must be <= l_corr/4");
}

RadiusProfile sample_profile_unchecked(double sigma_a_um, double l_corr_m, double dz_m,
                                       uint64_t seed, double a0_um, double length_m) {
    const auto n = static_cast<std::size_t>(std::ceil(length_m / dz_m)) + 1;

    RadiusProfile p;
    p.dz_m = length_m / static_cast<double>(n - 1);
    p.length_m = length_m;
    p.a_um.resize(n);

    const double alpha = std::exp(-p.dz_m / l_corr_m);
    double da = sigma_a_um * rng::normal(seed, 0, 0);
    p.a_um[0] = a0_um + da;
    const double step_sigma = sigma_a_um * std::sqrt(1.0 - alpha * alpha);
    for (std::size_t i = 1; i < n; ++i) {
        da = alpha * da + step_sigma * rng::normal(seed, 0, i);
        p.a_um[i] = a0_um + da;
    }
    return p;
}

RadiusProfile sample_profile(const FluctuationSpec& spec, double a0_um, double length_m) {
    spec.validate(length_m);
    const double dz = spec.dz_m > 0.0 ? spec.dz_m : FluctuationSpec::default_dz(spec.l_corr_m, length_m);
    return sample_profile_unchecked(spec.sigma_a_um, spec.l_corr_m, dz, spec.seed, a0_um, length_m);
}

// --- DispersionLookup -------------------------------------------------

namespace {

// Not-a-knot cubic spline second derivatives. The natural boundary
// condition would cost two orders of accuracy near the window edges, which
// the 1e-4 rad/m interpolation budget cannot afford.
std::vector<double> spline_second_derivs(const std::vector<double>& x,
                                         const std::vector<double>& y) {
    const std::size_t n = x.size();
    std::vector<double> m(n, 0.0);
    if (n < 4) return m;  // quadratic data; zero curvature fallback

    // Reduced tridiagonal system for m_1 .. m_{n-2}; the not-a-knot
    // closures express m_0 and m_{n-1} through their neighbors.
    const std::size_t k = n - 2;
    std::vector<double> sub(k, 0.0), diag(k, 0.0), sup(k, 0.0), rhs(k, 0.0);
    auto h = [&](std::size_t i) { return x[i + 1] - x[i]; };
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = h(i - 1), h1 = h(i);
        const std::size_t r = i - 1;
        sub[r] = h0;
        diag[r] = 2.0 * (h0 + h1);
        sup[r] = h1;
        rhs[r] = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
    }
    {  // left closure: m_0 = (1 + h0/h1) m_1 - (h0/h1) m_2
        const double r01 = h(0) / h(1);
        diag[0] += sub[0] * (1.0 + r01);
        sup[0] -= sub[0] * r01;
        sub[0] = 0.0;
    }
    {  // right closure: m_{n-1} = (1 + h_{n-2}/h_{n-3}) m_{n-2} - (...) m_{n-3}
        const double r21 = h(n - 2) / h(n - 3);
        diag[k - 1] += sup[k - 1] * (1.0 + r21);
        sub[k - 1] -= sup[k - 1] * r21;
        sup[k - 1] = 0.0;
    }
    for (std::size_t i = 1; i < k; ++i) {
        const double w = sub[i] / diag[i - 1];
        diag[i] -= w * sup[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    m[k] = rhs[k - 1] / diag[k - 1];
    for (std::size_t i = k - 1; i >= 1; --i) {
        m[i] = (rhs[i - 1] - sup[i - 1] * m[i + 1]) / diag[i - 1];
    }
    const double r01 = h(0) / h(1);
    m[0] = (1.0 + r01) * m[1] - r01 * m[2];
    const double r21 = h(n - 2) / h(n - 3);
    m[n - 1] = (1.0 + r21) * m[n - 2] - r21 * m[n - 3];
    return m;
}

}  // namespace

DispersionLookup::DispersionLookup(std::vector<double> radius_nodes_um, std::vector<double> dbeta0,
                                   std::array<std::vector<double>, 4> beta1_per_role)
    : nodes_(std::move(radius_nodes_um)) {
    dbeta0_.y = std::move(dbeta0);
    dbeta0_.m = spline_second_derivs(nodes_, dbeta0_.y);
    for (int r = 0; r < 4; ++r) {
        beta1_[r].y = std::move(beta1_per_role[r]);
        beta1_[r].m = spline_second_derivs(nodes_, beta1_[r].y);
    }
}

double DispersionLookup::eval(const Spline& s, double a_um) const {
    if (a_um < nodes_.front() || a_um > nodes_.back()) {
        throw WindowError("radius outside lookup window");
    }
    const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), a_um);
    const std::size_t j = std::min<std::size_t>(
        std::max<std::ptrdiff_t>(1, it - nodes_.begin()), nodes_.size() - 1);
    const double x0 = nodes_[j - 1], x1 = nodes_[j];
    const double h = x1 - x0;
    const double t = (a_um - x0) / h;
    const double u = 1.0 - t;
    return u * s.y[j - 1] + t * s.y[j] +
           h * h / 6.0 * ((u * u * u - u) * s.m[j - 1] + (t * t * t - t) * s.m[j]);
}

double DispersionLookup::dbeta0_at(double a_um) const { return eval(dbeta0_, a_um); }

double DispersionLookup::beta1_at(int role, double a_um) const { return eval(beta1_[role], a_um); }

DispersionLookup build_lookup(const modes::FiberGeometry& geom,
                              const phasematch::FieldAssignment& fields, double half_window_um,
                              int n_nodes) {
    if (geom.core_radius_um - half_window_um <= 0.0) {
        throw WindowError("lookup window reaches nonpositive radii: sigma too large");
    }
    std::vector<double> nodes(n_nodes);
    std::vector<double> dbeta0(n_nodes);
    std::array<std::vector<double>, 4> beta1;
    for (auto& v : beta1) v.resize(n_nodes);

    const modes::LPMode mode_of[4] = {fields.mode_p, fields.mode_q, fields.mode_s, fields.mode_i};
    const double omega_of[4] = {fields.omega_p, fields.omega_p, fields.omega_s, fields.omega_i};

    for (int k = 0; k < n_nodes; ++k) {
        const double a = geom.core_radius_um +
                         half_window_um * (2.0 * k / (n_nodes - 1.0) - 1.0);
        nodes[k] = a;
        modes::FiberGeometry g = geom;
        g.core_radius_um = a;
        // Single-difference evaluation of the aggregate mismatch.
        dbeta0[k] = phasematch::phase_mismatch(g, fields);
        for (int r = 0; r < 4; ++r) {
            beta1[r][k] = phasematch::dispersion_coefficients(g, mode_of[r], omega_of[r]).beta1;
        }
    }
    return DispersionLookup(std::move(nodes), std::move(dbeta0), std::move(beta1));
}

DispersionRecord profile_to_dispersion(const RadiusProfile& profile,
                                       const DispersionLookup& lookup) {
    DispersionRecord rec;
    rec.dz_m = profile.dz_m;
    rec.length_m = profile.length_m;
    const std::size_t n = profile.size();
    rec.dbeta0.resize(n);
    for (auto& v : rec.beta1) v.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = profile.a_um[i];
        rec.dbeta0[i] = lookup.dbeta0_at(a);
        for (int r = 0; r < 4; ++r) rec.beta1[r][i] = lookup.beta1_at(r, a);
    }
    return rec;
}

DispersionRecord uniform_dispersion(double length_m, double dz_m,
                                    const std::array<double, 4>& beta1, double dbeta0) {
    DispersionRecord rec;
    rec.dz_m = dz_m;
    rec.length_m = length_m;
    const auto n = static_cast<std::size_t>(std::ceil(length_m / dz_m)) + 1;
    rec.dz_m = length_m / static_cast<double>(n - 1);
    rec.dbeta0.assign(n, dbeta0);
    for (int r = 0; r < 4; ++r) rec.beta1[r].assign(n, beta1[r]);
    return rec;
}

}  // namespace fwmpair::stochastic
