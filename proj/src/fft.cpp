#include "fwmpair/fft.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fwmpair/constants.hpp"

namespace fwmpair::fft {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

void transform(linalg::cdouble* data, std::size_t n, int sign) {
    if (!is_power_of_two(n)) throw std::invalid_argument("fft length must be a power of two");
    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * kPi / static_cast<double>(len);
        const linalg::cdouble wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            linalg::cdouble w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const linalg::cdouble u = data[i + k];
                const linalg::cdouble v = data[i + k + len / 2] * w;
                data[i + k] = u + v;
                data[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

void transform_2d_unitary(linalg::CMatrix& m, int sign) {
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    // Rows.
    for (std::size_t i = 0; i < n; ++i) {
        transform(m.row(i), n, sign);
        for (std::size_t j = 0; j < n; ++j) m(i, j) *= scale;
    }
    // Columns, through a scratch buffer.
    std::vector<linalg::cdouble> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) col[i] = m(i, j);
        transform(col.data(), n, sign);
        for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i] * scale;
    }
}

}  // namespace fwmpair::fft
