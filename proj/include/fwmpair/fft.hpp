#pragma once

#include "fwmpair/linalg.hpp"

namespace fwmpair::fft {

// In-place radix-2 transform, sign = +1 applies exp(+i 2 pi jk / N).
// Length must be a power of two. No normalization.
void transform(linalg::cdouble* data, std::size_t n, int sign);

bool is_power_of_two(std::size_t n);

// Unitary 2D transform of a square matrix (1/sqrt(N) per axis); sign as
// above. Diagonal phase factors and axis bookkeeping live in jointstate.
void transform_2d_unitary(linalg::CMatrix& m, int sign);

}  // namespace fwmpair::fft
