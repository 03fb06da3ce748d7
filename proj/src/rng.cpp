#include "fwmpair/rng.hpp"

#include <cmath>

#include "fwmpair/constants.hpp"

namespace fwmpair::rng {

double normal(uint64_t seed, uint64_t stream, uint64_t step) {
    const double u1 = uniform(seed, stream, step, 0);
    const double u2 = uniform(seed, stream, step, 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

}  // namespace fwmpair::rng
