#pragma once

// Test-only eigensolver: cyclic complex Jacobi for Hermitian matrices.
// Deliberately independent of the library's SVD so it can serve as an
// oracle for the Schmidt-spectrum code path.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "fwmpair/linalg.hpp"

namespace oracles {

// Eigenvalues of a Hermitian matrix, descending. Each pivot first absorbs
// the phase of a(p,q) into row/column q, then applies a real Givens
// rotation that annihilates the now-real off-diagonal element.
inline std::vector<double> hermitian_eigenvalues(fwmpair::linalg::CMatrix a) {
    using cdouble = fwmpair::linalg::cdouble;
    const std::size_t n = a.rows();
    for (int sweep = 0; sweep < 120; ++sweep) {
        double off = 0.0, diag = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            diag += std::norm(a(p, p));
            for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
        }
        if (off <= 1e-30 * (diag + off)) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cdouble apq = a(p, q);
                const double m = std::abs(apq);
                if (m < 1e-300) continue;
                // Phase absorption: column q *= e^{-i phi}, row q *= e^{+i phi}.
                const cdouble e = apq / m;           // e^{i phi}
                const cdouble ec = std::conj(e);
                for (std::size_t k = 0; k < n; ++k) a(k, q) *= ec;
                for (std::size_t k = 0; k < n; ++k) a(q, k) *= e;
                // Now a(p,q) is real (= m). Real Jacobi rotation.
                const double app = a(p, p).real(), aqq = a(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * m, app - aqq);
                const double c = std::cos(theta), s = std::sin(theta);
                // Columns: [cp, cq] <- [c*cp + s*cq, -s*cp + c*cq]
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + s * akq;
                    a(k, q) = -s * akp + c * akq;
                }
                // Rows, same rotation from the left (transpose).
                for (std::size_t k = 0; k < n; ++k) {
                    const cdouble apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + s * aqk;
                    a(q, k) = -s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i).real();
    std::sort(ev.begin(), ev.end(), std::greater<double>());
    return ev;
}

}  // namespace oracles
