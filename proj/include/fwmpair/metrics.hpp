#pragma once

#include <vector>

#include "fwmpair/jointstate.hpp"

namespace fwmpair::metrics {

// Schmidt coefficients of the discretized amplitude, nonincreasing.
using SchmidtSpectrum = std::vector<double>;

SchmidtSpectrum schmidt_spectrum(const jointstate::JointAmplitude& ja);

// Heralded purity P = sum l^4 / (sum l^2)^2 from the Schmidt spectrum.
// Singular values below 1e-14 * l_max are truncated before the quartic sum.
double purity(const jointstate::JointAmplitude& ja);

// Reduced-state overlap matrix M(x,y) = sum_t A(x,t) conj(A(y,t)) dt.
linalg::CMatrix herald_gram(const jointstate::JointAmplitude& ja);

// Purity evaluated from the herald gram: tr(M^2)/tr(M)^2. Equal to the
// Schmidt route by the trace identity; used on the Monte-Carlo hot path.
double purity_from_gram(const linalg::CMatrix& gram);
double purity_fast(const jointstate::JointAmplitude& ja);

// Two-source interference visibility tr(M1 M2) / (tr M1 tr M2). Both
// amplitudes must live on the identical grid.
double visibility(const jointstate::JointAmplitude& ja1, const jointstate::JointAmplitude& ja2);
double visibility_from_grams(const linalg::CMatrix& g1, const linalg::CMatrix& g2);

}  // namespace fwmpair::metrics
