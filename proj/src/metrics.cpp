#include "fwmpair/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace fwmpair::metrics {

SchmidtSpectrum schmidt_spectrum(const jointstate::JointAmplitude& ja) {
    return linalg::singular_values(ja.grid);
}

double purity(const jointstate::JointAmplitude& ja) {
    const SchmidtSpectrum sv = schmidt_spectrum(ja);
    if (sv.empty() || sv.front() <= 0.0) throw std::invalid_argument("purity of a zero amplitude");
    const double cutoff = 1e-14 * sv.front();
    double s2 = 0.0, s4 = 0.0;
    for (double v : sv) {
        if (v < cutoff) break;  // sorted descending
        const double v2 = v * v;
        s2 += v2;
        s4 += v2 * v2;
    }
    return s4 / (s2 * s2);
}

linalg::CMatrix herald_gram(const jointstate::JointAmplitude& ja) {
    linalg::CMatrix g = linalg::gram(ja.grid, 1e-300);
    const double dt = ja.i_step;
    const std::size_t total = g.rows() * g.cols();
    for (std::size_t k = 0; k < total; ++k) g.data()[k] *= dt;
    return g;
}

double purity_from_gram(const linalg::CMatrix& gram) {
    const double tr = linalg::trace_real(gram);
    if (tr <= 0.0) throw std::invalid_argument("purity of a zero amplitude");
    return linalg::frobenius_sq(gram) / (tr * tr);
}

double purity_fast(const jointstate::JointAmplitude& ja) {
    return purity_from_gram(herald_gram(ja));
}

namespace {

void check_same_grid(const jointstate::JointAmplitude& a, const jointstate::JointAmplitude& b) {
    const bool same = a.grid.rows() == b.grid.rows() && a.grid.cols() == b.grid.cols() &&
                      a.domain == b.domain && std::fabs(a.s_step - b.s_step) <= 1e-12 * a.s_step &&
                      std::fabs(a.s_offset - b.s_offset) <= 1e-9 * std::fabs(a.s_step) + 1e-30;
    if (!same) throw std::invalid_argument("visibility requires amplitudes on the identical grid");
}

}  // namespace

double visibility_from_grams(const linalg::CMatrix& g1, const linalg::CMatrix& g2) {
    const double t1 = linalg::trace_real(g1), t2 = linalg::trace_real(g2);
    if (t1 <= 0.0 || t2 <= 0.0) throw std::invalid_argument("visibility of a zero amplitude");
    return linalg::trace_product_hermitian(g1, g2) / (t1 * t2);
}

double visibility(const jointstate::JointAmplitude& ja1, const jointstate::JointAmplitude& ja2) {
    check_same_grid(ja1, ja2);
    return visibility_from_grams(herald_gram(ja1), herald_gram(ja2));
}

}  // namespace fwmpair::metrics
