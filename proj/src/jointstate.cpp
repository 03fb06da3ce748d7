#include "fwmpair/jointstate.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "fwmpair/constants.hpp"

namespace fwmpair::jointstate {

CollisionSetup standard_collision_setup(double beta1_p, double beta1_q, double t_p_s,
                                        double t_q_s) {
    const double walkoff = std::fabs(beta1_p - beta1_q);
    if (walkoff < 1e-18) {
        throw std::invalid_argument("standard_collision_setup: degenerate group velocities");
    }
    CollisionSetup s;
    s.separation_s = 4.0 * std::sqrt(t_p_s * t_p_s + t_q_s * t_q_s);
    s.length_m = 2.0 * s.separation_s / walkoff;
    // The slower pump (larger beta1) enters first, i.e. has the earlier
    // (smaller) delay; the pulses then coincide at z = L/2.
    if (beta1_p > beta1_q) {
        s.delay_p_s = -0.5 * s.separation_s;
        s.delay_q_s = +0.5 * s.separation_s;
    } else {
        s.delay_p_s = +0.5 * s.separation_s;
        s.delay_q_s = -0.5 * s.separation_s;
    }
    return s;
}

void TimeGrid::validate() const {
    if (!fft::is_power_of_two(n)) throw std::invalid_argument("grid size must be a power of two");
    if (!(step > 0.0)) throw std::invalid_argument("grid step must be positive");
}

namespace {

// Trapezoid prefix sums with Kahan compensation; the uniform-profile
// cross-check against the closed form needs the accumulation error held
// near machine epsilon over ~1e3 segments.
void prefix_trapezoid(const std::vector<double>& rate, double dz, std::vector<double>& out) {
    out.resize(rate.size());
    out[0] = 0.0;
    double sum = 0.0, comp = 0.0;
    for (std::size_t i = 1; i < rate.size(); ++i) {
        const double term = 0.5 * (rate[i - 1] + rate[i]) * dz - comp;
        const double next = sum + term;
        comp = (next - sum) - term;
        sum = next;
        out[i] = sum;
    }
}

}  // namespace

CumulativeDelays cumulative_delays(const stochastic::DispersionRecord& record) {
    CumulativeDelays cd;
    cd.dz_m = record.dz_m;
    cd.length_m = record.length_m;
    for (int r = 0; r < 4; ++r) prefix_trapezoid(record.beta1[r], record.dz_m, cd.b[r]);
    prefix_trapezoid(record.dbeta0, record.dz_m, cd.phi);
    return cd;
}

namespace {

constexpr int kRoleP = 0, kRoleQ = 1, kRoleS = 2, kRoleI = 3;

// Value of a trapezoid-consistent cumulative integral at z between nodes:
// the integrand is linear on each segment, so the integral is quadratic.
double segment_integral(const std::vector<double>& cumulative, const std::vector<double>& rate,
                        double dz, std::size_t seg, double s) {
    const double slope = (rate[seg + 1] - rate[seg]) / dz;
    return cumulative[seg] + rate[seg] * s + 0.5 * slope * s * s;
}

}  // namespace

CollisionSolver::CollisionSolver(const stochastic::DispersionRecord& record,
                                 const CumulativeDelays& delays)
    : record_(record), delays_(delays) {
    const auto& b1s = record.beta1[kRoleS];
    const auto& b1i = record.beta1[kRoleI];
    const double first = b1s[0] - b1i[0];
    if (first == 0.0) throw CollisionError("collision solver: degenerate sideband group velocities");
    increasing_ = first > 0.0;
    std::vector<double> rate(record.size());
    for (std::size_t k = 0; k < record.size(); ++k) {
        const double d = b1s[k] - b1i[k];
        if ((d > 0.0) != increasing_ || d == 0.0) {
            throw CollisionError("collision solver: beta1_s - beta1_i changes sign inside fiber");
        }
        rate[k] = d;
    }
    prefix_trapezoid(rate, record.dz_m, e_nodes_);
    d0_ = e_nodes_.back();  // E(L) = D(0)
}

CollisionPoint CollisionSolver::solve(double u) const {
    CollisionPoint cp;
    // D(z) = E(L) - E(z) with E(z) = B_s(z) - B_i(z); E(0) = 0. The target
    // is E(z_c) = D(0) - u.
    const double lo = std::min(0.0, d0_), hi = std::max(0.0, d0_);
    const double tol = 1e-12 * (hi - lo);  // exact-boundary points stay inside
    double e_target = d0_ - u;
    if (e_target < lo - tol || e_target > hi + tol) {
        cp.inside = false;
        return cp;
    }
    e_target = std::clamp(e_target, lo, hi);
    const std::size_t n = record_.size();
    // Binary search for the segment containing the target value of E.
    std::size_t a = 0, b = n - 1;
    auto e_at = [&](std::size_t k) { return e_nodes_[k]; };
    while (b - a > 1) {
        const std::size_t mid = (a + b) / 2;
        const bool below = increasing_ ? (e_at(mid) <= e_target) : (e_at(mid) >= e_target);
        if (below) {
            a = mid;
        } else {
            b = mid;
        }
    }
    // Quadratic solve within the segment.
    const double dz = record_.dz_m;
    const double rate0 = record_.beta1[kRoleS][a] - record_.beta1[kRoleI][a];
    const double rate1 = record_.beta1[kRoleS][b] - record_.beta1[kRoleI][b];
    const double qa = 0.5 * (rate1 - rate0) / dz;
    const double qb = rate0;
    const double qc = e_at(a) - e_target;
    double s;
    if (std::fabs(qa) < 1e-30) {
        s = -qc / qb;
    } else {
        const double disc = std::max(qb * qb - 4.0 * qa * qc, 0.0);
        const double sq = std::sqrt(disc);
        const double r = qb >= 0.0 ? -0.5 * (qb + sq) : -0.5 * (qb - sq);
        const double s1 = r / qa, s2 = qc / r;
        const bool ok1 = s1 >= -1e-9 * dz && s1 <= dz * (1.0 + 1e-9);
        s = ok1 ? s1 : s2;
    }
    s = std::clamp(s, 0.0, dz);
    cp.inside = true;
    cp.z_c = static_cast<double>(a) * dz + s;
    cp.b_p = segment_integral(delays_.b[kRoleP], record_.beta1[kRoleP], dz, a, s);
    cp.b_q = segment_integral(delays_.b[kRoleQ], record_.beta1[kRoleQ], dz, a, s);
    cp.b_s = segment_integral(delays_.b[kRoleS], record_.beta1[kRoleS], dz, a, s);
    cp.phi = segment_integral(delays_.phi, record_.dbeta0, dz, a, s);
    return cp;
}

TimeGrid plan_grid(const PumpConfig& pumps, const stochastic::DispersionRecord& record,
                   std::size_t n) {
    const CumulativeDelays cd = cumulative_delays(record);
    const std::size_t last = record.size() - 1;
    const double d0 = cd.b[kRoleS][last] - cd.b[kRoleI][last];

    const double t_big = std::max(pumps.t_p_s, pumps.t_q_s);
    const double u_lo = std::min(0.0, d0) - 6.0 * t_big;
    const double u_hi = std::max(0.0, d0) + 6.0 * t_big;

    // Scan the pump-overlap region for the v = (t_s + t_i)/2 span.
    const double tp2 = pumps.t_p_s * pumps.t_p_s, tq2 = pumps.t_q_s * pumps.t_q_s;
    const double t_sum = std::sqrt(tp2 + tq2);
    const double t_prod = pumps.t_p_s * pumps.t_q_s / t_sum;
    double v_lo = 0.0, v_hi = 0.0;
    bool any = false;
    double best_sep = 0.0, best_center = 0.0;
    for (std::size_t k = 0; k <= last; ++k) {
        const double arr_p = pumps.delay_p_s + cd.b[kRoleP][k];
        const double arr_q = pumps.delay_q_s + cd.b[kRoleQ][k];
        const double sep = std::fabs(arr_p - arr_q);
        const double mu = (tq2 * arr_p + tp2 * arr_q) / (tp2 + tq2);
        const double g = 0.5 * ((cd.b[kRoleS][last] - cd.b[kRoleS][k]) +
                                (cd.b[kRoleI][last] - cd.b[kRoleI][k]));
        const double center = mu + g;
        if (!any || sep < best_sep) {
            best_sep = sep;
            best_center = center;
        }
        if (sep <= 6.5 * t_sum) {
            const double lo = center - 6.5 * t_prod, hi = center + 6.5 * t_prod;
            if (!any || lo < v_lo) v_lo = std::min(any ? v_lo : lo, lo);
            if (!any || hi > v_hi) v_hi = std::max(any ? v_hi : hi, hi);
            any = true;
        }
    }
    if (!any) {  // pumps never overlap inside the fiber; center on closest approach
        v_lo = best_center - 6.5 * t_prod;
        v_hi = best_center + 6.5 * t_prod;
    }

    TimeGrid grid;
    grid.n = n;
    grid.time_origin = 0.5 * (v_lo + v_hi);
    const double ts_lo = v_lo + 0.5 * u_lo, ts_hi = v_hi + 0.5 * u_hi;
    const double ti_lo = v_lo - 0.5 * u_hi, ti_hi = v_hi - 0.5 * u_lo;
    const double width = ts_hi - ts_lo;
    assert(std::fabs((ti_hi - ti_lo) - width) < 1e-9 * std::max(width, 1e-30));
    grid.t_s_offset = ts_lo - grid.time_origin;
    grid.t_i_offset = ti_lo - grid.time_origin;
    grid.step = width / static_cast<double>(n - 1);
    grid.validate();
    return grid;
}

JointAmplitude build_jta(const PumpConfig& pumps, const stochastic::DispersionRecord& record,
                         double gamma, const TimeGrid& grid) {
    grid.validate();
    const CumulativeDelays cd = cumulative_delays(record);
    const CollisionSolver solver(record, cd);
    const std::size_t n = grid.n;
    const std::size_t last = record.size() - 1;
    const double bs_total = cd.b[kRoleS][last];

    // t_s - t_i is constant along each grid diagonal d = j - k + (n-1).
    const std::size_t ndiag = 2 * n - 1;
    std::vector<char> inside(ndiag, 0);
    std::vector<double> c_p(ndiag, 0.0), c_q(ndiag, 0.0);
    std::vector<linalg::cdouble> phase(ndiag);
    for (std::size_t d = 0; d < ndiag; ++d) {
        const double u = (grid.t_s_offset - grid.t_i_offset) +
                         (static_cast<double>(d) - static_cast<double>(n - 1)) * grid.step;
        const CollisionPoint cp = solver.solve(u);
        if (!cp.inside) continue;
        inside[d] = 1;
        const double shift_s = bs_total - cp.b_s;  // B_s(L) - B_s(z_c)
        c_p[d] = shift_s + cp.b_p + pumps.delay_p_s - grid.time_origin;
        c_q[d] = shift_s + cp.b_q + pumps.delay_q_s - grid.time_origin;
        phase[d] = std::polar(1.0, cp.phi);
    }

    JointAmplitude ja;
    ja.domain = Domain::Time;
    ja.s_offset = grid.t_s_offset;
    ja.i_offset = grid.t_i_offset;
    ja.s_step = ja.i_step = grid.step;
    ja.grid = linalg::CMatrix(n, n);

    const linalg::cdouble prefactor =
        linalg::cdouble(0.0, 2.0 * gamma) * std::sqrt(pumps.power_p_w * pumps.power_q_w);
    const double inv2tp2 = 0.5 / (pumps.t_p_s * pumps.t_p_s);
    const double inv2tq2 = 0.5 / (pumps.t_q_s * pumps.t_q_s);

    for (std::size_t j = 0; j < n; ++j) {
        const double ts = grid.t_s_offset + static_cast<double>(j) * grid.step;
        linalg::cdouble* row = ja.grid.row(j);
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t d = j - k + (n - 1);
            if (!inside[d]) continue;  // row is zero-initialized
            const double ap = ts - c_p[d];
            const double aq = ts - c_q[d];
            const double expo = -(ap * ap * inv2tp2 + aq * aq * inv2tq2);
            if (expo < -60.0) continue;
            row[k] = prefactor * std::exp(expo) * phase[d];
        }
    }
    return ja;
}

JointAmplitude build_jta_uniform(const PumpConfig& pumps, const std::array<double, 4>& beta1,
                                 double dbeta0, double gamma, double length_m,
                                 const TimeGrid& grid) {
    grid.validate();
    const double b1p = beta1[kRoleP], b1q = beta1[kRoleQ];
    const double b1s = beta1[kRoleS], b1i = beta1[kRoleI];
    const double dsi = b1s - b1i;
    if (dsi == 0.0) throw CollisionError("uniform builder: degenerate sideband group velocities");

    JointAmplitude ja;
    ja.domain = Domain::Time;
    ja.s_offset = grid.t_s_offset;
    ja.i_offset = grid.t_i_offset;
    ja.s_step = ja.i_step = grid.step;
    const std::size_t n = grid.n;
    ja.grid = linalg::CMatrix(n, n);

    const linalg::cdouble prefactor =
        linalg::cdouble(0.0, 2.0 * gamma) * std::sqrt(pumps.power_p_w * pumps.power_q_w);
    const double inv2tp2 = 0.5 / (pumps.t_p_s * pumps.t_p_s);
    const double inv2tq2 = 0.5 / (pumps.t_q_s * pumps.t_q_s);

    for (std::size_t j = 0; j < n; ++j) {
        const double ts = grid.t_s_offset + static_cast<double>(j) * grid.step;
        linalg::cdouble* row = ja.grid.row(j);
        for (std::size_t k = 0; k < n; ++k) {
            const double ti = grid.t_i_offset + static_cast<double>(k) * grid.step;
            const double z_c = length_m - (ts - ti) / dsi;
            if (z_c < 0.0 || z_c > length_m) continue;
            // Grid times are measured from grid.time_origin, so the launch
            // delays move into the same frame.
            const double t_c = (b1s * ti - b1i * ts) / dsi;
            const double ap = t_c - (b1p * z_c + pumps.delay_p_s - grid.time_origin);
            const double aq = t_c - (b1q * z_c + pumps.delay_q_s - grid.time_origin);
            const double expo = -(ap * ap * inv2tp2 + aq * aq * inv2tq2);
            if (expo < -60.0) continue;
            row[k] = prefactor * std::exp(expo) * std::polar(1.0, dbeta0 * z_c);
        }
    }
    return ja;
}

JointAmplitude jta_to_jsa(const JointAmplitude& ja) {
    if (ja.domain != Domain::Time) throw std::invalid_argument("jta_to_jsa expects a time-domain amplitude");
    const std::size_t n = ja.grid.rows();
    if (!fft::is_power_of_two(n)) throw std::invalid_argument("grid size must be a power of two");

    JointAmplitude out;
    out.domain = Domain::Frequency;
    out.grid = ja.grid;
    // Pre-multiply by (-1)^(j+k) so the DFT output is centered.
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if ((j + k) & 1u) out.grid(j, k) = -out.grid(j, k);
        }
    }
    fft::transform_2d_unitary(out.grid, +1);

    const double dnu_s = 2.0 * kPi / (static_cast<double>(n) * ja.s_step);
    const double dnu_i = 2.0 * kPi / (static_cast<double>(n) * ja.i_step);
    out.s_step = dnu_s;
    out.i_step = dnu_i;
    out.s_offset = -dnu_s * static_cast<double>(n / 2);
    out.i_offset = -dnu_i * static_cast<double>(n / 2);
    // Diagonal phase factors from the time-axis offsets; unitary, so the
    // Schmidt spectrum is untouched.
    for (std::size_t j = 0; j < n; ++j) {
        const double nu_s = out.s_offset + static_cast<double>(j) * dnu_s;
        const linalg::cdouble ps = std::polar(1.0, nu_s * ja.s_offset);
        for (std::size_t k = 0; k < n; ++k) {
            const double nu_i = out.i_offset + static_cast<double>(k) * dnu_i;
            out.grid(j, k) *= ps * std::polar(1.0, nu_i * ja.i_offset);
        }
    }
    return out;
}

double generation_probability(const JointAmplitude& ja) {
    double s = 0.0;
    const std::size_t total = ja.grid.rows() * ja.grid.cols();
    for (std::size_t k = 0; k < total; ++k) s += std::norm(ja.grid.data()[k]);
    return s * ja.s_step * ja.i_step;
}

}  // namespace fwmpair::jointstate
