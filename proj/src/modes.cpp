#include "fwmpair/modes.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fwmpair/bessel.hpp"
#include "fwmpair/constants.hpp"

namespace fwmpair::modes {

namespace {

constexpr double kLP11CutoffV = 2.404825557695773;  // first zero of J0

struct Indices {
    double n_core;
    double n_clad;
};

Indices indices_at(const FiberGeometry& geom, double lambda_um) {
    const auto core_model = material::sellmeier_for_composition(geom.composition);
    const auto clad_model = material::sellmeier_for_composition({0.0});
    return {material::refractive_index_extended(core_model, lambda_um),
            material::refractive_index_extended(clad_model, lambda_um)};
}

double v_from(const FiberGeometry& geom, double lambda_um, const Indices& n) {
    return 2.0 * kPi / lambda_um * geom.core_radius_um *
           std::sqrt(n.n_core * n.n_core - n.n_clad * n.n_clad);
}

// Characteristic function in w; roots are guided modes. Written in the
// u J_{m-1}(u)/J_m(u) = -w K_{m-1}(w)/K_m(w) form, with J_{-1} = -J_1.
double char_fn(double w, double v, int m) {
    const double u = std::sqrt(std::max(v * v - w * w, 0.0));
    if (m == 0) {
        // u J1(u)/J0(u) - w K1(w)/K0(w)
        return u * bessel::j1(u) / bessel::j0(u) - w * bessel::k1(w) / bessel::k0(w);
    }
    // u J0(u)/J1(u) + w K0(w)/K1(w)
    return u * bessel::j0(u) / bessel::j1(u) + w * bessel::k0(w) / bessel::k1(w);
}

}  // namespace

double v_number(const FiberGeometry& geom, double lambda_um) {
    const Indices n = indices_at(geom, lambda_um);
    return v_from(geom, lambda_um, n);
}

ModeSolution solve_mode(const FiberGeometry& geom, LPMode mode, double lambda_um) {
    if (!(geom.core_radius_um > 0.0)) {
        throw std::invalid_argument("core radius must be positive");
    }
    const Indices n = indices_at(geom, lambda_um);
    const double v = v_from(geom, lambda_um, n);
    const int m = azimuthal_order(mode);
    if (mode == LPMode::LP11 && v <= kLP11CutoffV) {
        throw ModeError("LP11 below cutoff at this wavelength");
    }

    // Bracket w by sign scanning; the characteristic function has poles at
    // zeros of J_m(u), so candidate brackets are validated by re-evaluating
    // the converged root.
    constexpr int kScan = 200;
    const double w_lo = v * 1e-9, w_hi = v * (1.0 - 1e-12);
    double best_root = -1.0;
    double prev_w = w_lo, prev_f = char_fn(prev_w, v, m);
    for (int i = 1; i <= kScan; ++i) {
        const double w = w_lo + (w_hi - w_lo) * static_cast<double>(i) / kScan;
        const double f = char_fn(w, v, m);
        if (std::isfinite(prev_f) && std::isfinite(f) && prev_f * f < 0.0) {
            // Bisection to machine precision in w.
            double a = prev_w, b = w, fa = prev_f;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (a + b);
                if (mid == a || mid == b) break;
                const double fm = char_fn(mid, v, m);
                if (fa * fm <= 0.0) {
                    b = mid;
                } else {
                    a = mid;
                    fa = fm;
                }
            }
            const double w_root = 0.5 * (a + b);
            // Reject pole crossings: genuine roots have a small residual.
            if (std::fabs(char_fn(w_root, v, m)) < 1e-9 * std::max(1.0, v)) {
                best_root = std::max(best_root, w_root);
            }
        }
        prev_w = w;
        prev_f = f;
    }
    if (best_root < 0.0) throw ModeError("characteristic equation: no root bracketed");

    ModeSolution s;
    s.w = best_root;
    s.u = std::sqrt(std::max(v * v - best_root * best_root, 0.0));
    s.v = v;
    s.n_core = n.n_core;
    s.n_clad = n.n_clad;
    s.core_radius_um = geom.core_radius_um;
    s.mode = mode;
    const double k0 = 2.0 * kPi / lambda_um;  // rad/um
    s.n_eff = std::sqrt(n.n_clad * n.n_clad +
                        (s.w / (geom.core_radius_um * k0)) * (s.w / (geom.core_radius_um * k0)));
    s.beta_rad_per_m = k0 * s.n_eff * 1e6;  // rad/um -> rad/m
    return s;
}

double characteristic_residual(const ModeSolution& s) {
    return std::fabs(char_fn(s.w, s.v, azimuthal_order(s.mode)));
}

double cutoff_wavelength(const FiberGeometry& geom, LPMode mode) {
    if (mode != LPMode::LP11) throw ModeError("no cutoff: LP01 is guided at all wavelengths");
    // V(lambda) decreases with lambda; bisect V(lambda) = 2.405 on the
    // extended band.
    double lo = material::kExtendedBandMin, hi = material::kExtendedBandMax;
    auto g = [&](double lam) { return v_number(geom, lam) - kLP11CutoffV; };
    if (g(lo) < 0.0 || g(hi) > 0.0) throw ModeError("LP11 cutoff not bracketed in search window");
    while (hi - lo > 1e-4) {  // 0.1 nm in um
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double radial_profile(const ModeSolution& s, double r_um) {
    const int m = azimuthal_order(s.mode);
    const double a = s.core_radius_um;
    const double x = r_um / a;
    auto jm = [&](double t) { return m == 0 ? bessel::j0(t) : bessel::j1(t); };
    auto km = [&](double t) { return m == 0 ? bessel::k0(t) : bessel::k1(t); };
    if (x <= 1.0) return jm(s.u * x);
    return jm(s.u) / km(s.w) * km(s.w * x);
}

namespace {

// Integral of f(r) r dr via composite Gauss-Legendre(16) panels.
template <typename F>
double radial_integral(F&& f, double r0, double r1, int panels) {
    static const double kX[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                 0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                 0.9445750230732326, 0.9894009349916499};
    static const double kW[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                 0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                 0.0622535239386479, 0.0271524594117541};
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = r0 + (r1 - r0) * p / panels;
        const double b = r0 + (r1 - r0) * (p + 1) / panels;
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        double acc = 0.0;
        for (int i = 0; i < 8; ++i) {
            const double rp = c + h * kX[i], rm = c - h * kX[i];
            acc += kW[i] * (f(rp) * rp + f(rm) * rm);
        }
        total += acc * h;
    }
    return total;
}

}  // namespace

double nonlinear_overlap(const ModeSolution& p, const ModeSolution& s,
                         const ModeSolution& q, const ModeSolution& i) {
    const ModeSolution* fields[4] = {&p, &s, &q, &i};
    // Azimuthal part: each LP11 contributes cos(phi). The selection rule
    // over [0, 2pi): 0 LP11 -> 2pi; 2 -> pi; 4 -> 3pi/4; odd counts vanish.
    int n11 = 0;
    for (const auto* f : fields) n11 += (f->mode == LPMode::LP11) ? 1 : 0;
    double az_product;
    switch (n11) {
        case 0: az_product = 2.0 * kPi; break;
        case 2: az_product = kPi; break;
        case 4: az_product = 0.75 * kPi; break;
        default: return 0.0;
    }

    const double a = p.core_radius_um;
    const double w_min = std::min(std::min(p.w, s.w), std::min(q.w, i.w));
    const double r_max = a * (1.0 + 14.0 / w_min);

    auto norm_sq = [&](const ModeSolution& f) {
        const double az = (f.mode == LPMode::LP11) ? kPi : 2.0 * kPi;
        const double core = radial_integral([&](double r) { const double v = radial_profile(f, r); return v * v; }, 0.0, a, 8);
        const double clad = radial_integral([&](double r) { const double v = radial_profile(f, r); return v * v; }, a, r_max, 24);
        return az * (core + clad);
    };

    auto prod = [&](double r) {
        return radial_profile(p, r) * radial_profile(s, r) * radial_profile(q, r) *
               radial_profile(i, r);
    };
    const double core = radial_integral(prod, 0.0, a, 8);
    const double clad = radial_integral(prod, a, r_max, 24);
    const double num = az_product * (core + clad);

    double denom = 1.0;
    for (const auto* f : fields) denom *= std::sqrt(norm_sq(*f));
    const double f_um2 = num / denom;  // 1/um^2
    return f_um2 * 1e12;               // 1/m^2
}

}  // namespace fwmpair::modes
