#include "fwmpair/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace fwmpair::linalg {

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

CMatrix gram(const CMatrix& a, double zero_tol) {
    const std::size_t n = a.rows(), m = a.cols();
    CMatrix g(n, n);

    std::vector<char> live(n, 1);
    if (zero_tol > 0.0) {
        double amax = 0.0;
        for (std::size_t i = 0; i < n * m; ++i) amax = std::max(amax, std::norm(a.data()[i]));
        const double thresh = zero_tol * zero_tol * amax;
        for (std::size_t i = 0; i < n; ++i) {
            const cdouble* ri = a.row(i);
            double rmax = 0.0;
            for (std::size_t k = 0; k < m; ++k) rmax = std::max(rmax, std::norm(ri[k]));
            live[i] = rmax > thresh ? 1 : 0;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (!live[i]) continue;
        const cdouble* ri = a.row(i);
        for (std::size_t j = 0; j <= i; ++j) {
            if (!live[j]) continue;
            const cdouble* rj = a.row(j);
            double sr = 0.0, si = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                const double ar = ri[k].real(), ai = ri[k].imag();
                const double br = rj[k].real(), bi = rj[k].imag();
                sr += ar * br + ai * bi;
                si += ai * br - ar * bi;
            }
            g(i, j) = {sr, si};
            if (i != j) g(j, i) = {sr, -si};
        }
    }
    return g;
}

double trace_real(const CMatrix& h) {
    double s = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i) s += h(i, i).real();
    return s;
}

double trace_product_hermitian(const CMatrix& g1, const CMatrix& g2) {
    assert(g1.rows() == g2.rows() && g1.cols() == g2.cols());
    // tr(G1 G2) = sum_ij (G1)_ij (G2)_ji = sum_ij (G1)_ij conj((G2)_ij).
    double s = 0.0;
    const std::size_t total = g1.rows() * g1.cols();
    const cdouble* p1 = g1.data();
    const cdouble* p2 = g2.data();
    for (std::size_t k = 0; k < total; ++k) {
        s += p1[k].real() * p2[k].real() + p1[k].imag() * p2[k].imag();
    }
    return s;
}

double frobenius_sq(const CMatrix& m) {
    double s = 0.0;
    const std::size_t total = m.rows() * m.cols();
    for (std::size_t k = 0; k < total; ++k) s += std::norm(m.data()[k]);
    return s;
}

namespace {

// Complex Householder bidiagonalization; returns |diagonal| and
// |superdiagonal|. Unitary diagonal rescalings make any complex bidiagonal
// real without changing singular values, so magnitudes suffice.
void bidiagonalize(CMatrix& a, std::vector<double>& d, std::vector<double>& e) {
    const std::size_t m = a.rows(), n = a.cols();
    assert(m >= n);
    d.assign(n, 0.0);
    e.assign(n > 0 ? n - 1 : 0, 0.0);
    std::vector<cdouble> u(std::max(m, n));

    for (std::size_t k = 0; k < n; ++k) {
        // Left reflector: zero column k below the diagonal.
        {
            double norm2 = 0.0;
            for (std::size_t i = k; i < m; ++i) norm2 += std::norm(a(i, k));
            const double norm = std::sqrt(norm2);
            if (norm > 0.0) {
                const cdouble x0 = a(k, k);
                const double ax0 = std::abs(x0);
                const cdouble phase = ax0 > 0.0 ? x0 / ax0 : cdouble(1.0, 0.0);
                for (std::size_t i = k; i < m; ++i) u[i] = a(i, k);
                u[k] += phase * norm;
                const double uhu = 2.0 * norm * (norm + ax0);
                if (uhu > 0.0) {
                    const double tau = 2.0 / uhu;
                    for (std::size_t j = k; j < n; ++j) {
                        cdouble s = 0.0;
                        for (std::size_t i = k; i < m; ++i) s += std::conj(u[i]) * a(i, j);
                        s *= tau;
                        for (std::size_t i = k; i < m; ++i) a(i, j) -= s * u[i];
                    }
                }
            }
            d[k] = std::abs(a(k, k));
        }
        // Right reflector: zero row k right of the superdiagonal.
        if (k + 1 < n) {
            if (k + 2 < n) {
                double norm2 = 0.0;
                for (std::size_t j = k + 1; j < n; ++j) norm2 += std::norm(a(k, j));
                const double norm = std::sqrt(norm2);
                if (norm > 0.0) {
                    const cdouble x0 = a(k, k + 1);
                    const double ax0 = std::abs(x0);
                    const cdouble phase = ax0 > 0.0 ? x0 / ax0 : cdouble(1.0, 0.0);
                    for (std::size_t j = k + 1; j < n; ++j) u[j] = std::conj(a(k, j));
                    u[k + 1] += std::conj(phase) * norm;
                    const double uhu = 2.0 * norm * (norm + ax0);
                    if (uhu > 0.0) {
                        const double tau = 2.0 / uhu;
                        for (std::size_t i = k; i < m; ++i) {
                            cdouble s = 0.0;
                            for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * u[j];
                            s *= tau;
                            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= s * std::conj(u[j]);
                        }
                    }
                }
            }
            e[k] = std::abs(a(k, k + 1));
        }
    }
}

// Implicit-shift QR on the real bidiagonal (Golub-Kahan), values only.
// w[0..n-1] is the diagonal; rv1[i] = superdiagonal element above w[i]
// (rv1[0] = 0).
void bidiagonal_qr(std::vector<double>& w, std::vector<double>& rv1) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return;
    constexpr double eps = 2.3e-16;
    double anorm = 0.0;
    for (int i = 0; i < n; ++i) anorm = std::max(anorm, std::fabs(w[i]) + std::fabs(rv1[i]));

    auto sign = [](double a, double b) { return b >= 0.0 ? std::fabs(a) : -std::fabs(a); };

    for (int k = n - 1; k >= 0; --k) {
        for (int its = 1;; ++its) {
            if (its > 60) throw std::runtime_error("SVD: bidiagonal QR failed to converge");
            bool flag = true;
            int l, nm = 0;
            for (l = k; l >= 0; --l) {
                nm = l - 1;
                if (l == 0 || std::fabs(rv1[l]) <= eps * anorm) {
                    flag = false;
                    break;
                }
                if (std::fabs(w[nm]) <= eps * anorm) break;
            }
            if (flag) {
                // w[l-1] negligible: rotate rv1[l] out of the picture.
                double c = 0.0, s = 1.0;
                for (int i = l; i <= k; ++i) {
                    const double f = s * rv1[i];
                    rv1[i] = c * rv1[i];
                    if (std::fabs(f) <= eps * anorm) break;
                    const double g = w[i];
                    const double h = std::hypot(f, g);
                    w[i] = h;
                    c = g / h;
                    s = -f / h;
                }
            }
            double z = w[k];
            if (l == k) {  // converged
                if (z < 0.0) w[k] = -z;
                break;
            }
            // Wilkinson shift from the trailing 2x2 of B^T B.
            double x = w[l];
            nm = k - 1;
            double y = w[nm];
            double g = rv1[nm];
            double h = rv1[k];
            double f = ((y - z) * (y + z) + (g - h) * (g + h)) / (2.0 * h * y);
            g = std::hypot(f, 1.0);
            f = ((x - z) * (x + z) + h * (y / (f + sign(g, f)) - h)) / x;
            // QR sweep with bulge chasing.
            double c = 1.0, s = 1.0;
            for (int j = l; j <= nm; ++j) {
                const int i = j + 1;
                g = rv1[i];
                y = w[i];
                h = s * g;
                g = c * g;
                z = std::hypot(f, h);
                rv1[j] = z;
                c = f / z;
                s = h / z;
                f = x * c + g * s;
                g = g * c - x * s;
                h = y * s;
                y *= c;
                z = std::hypot(f, h);
                w[j] = z;
                if (z != 0.0) {
                    c = f / z;
                    s = h / z;
                }
                f = c * g + s * y;
                x = c * y - s * g;
            }
            rv1[l] = 0.0;
            rv1[k] = f;
            w[k] = x;
        }
    }
    for (int i = 0; i < n; ++i) w[i] = std::fabs(w[i]);
}

}  // namespace

std::vector<double> singular_values(const CMatrix& a) {
    CMatrix work;
    if (a.rows() >= a.cols()) {
        work = a;
    } else {
        work = CMatrix(a.cols(), a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            for (std::size_t j = 0; j < a.cols(); ++j) work(j, i) = std::conj(a(i, j));
        }
    }
    std::vector<double> d, e;
    bidiagonalize(work, d, e);
    std::vector<double> rv1(d.size(), 0.0);
    for (std::size_t i = 1; i < d.size(); ++i) rv1[i] = e[i - 1];
    bidiagonal_qr(d, rv1);
    std::sort(d.begin(), d.end(), std::greater<double>());
    return d;
}

}  // namespace fwmpair::linalg
