#pragma once

#include <cstdint>

namespace fwmpair::rng {

// Stateless counter-based generator: every variate is a pure function of
// (seed, stream, step, substream), so profiles are bit-identical no matter
// how realizations are scheduled across workers.

inline uint64_t mix64(uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

inline uint64_t counter_hash(uint64_t seed, uint64_t stream, uint64_t step, uint64_t sub) {
    uint64_t h = seed + 0x9E3779B97F4A7C15ULL;
    h = mix64(h ^ (stream + 0xD1B54A32D192ED03ULL));
    h = mix64(h ^ (step + 0x8CB92BA72F3D8DD7ULL));
    h = mix64(h ^ (sub + 0xE7037ED1A0B428DBULL));
    return h;
}

// Uniform double in (0, 1]; never returns 0 so it is safe under log().
inline double uniform(uint64_t seed, uint64_t stream, uint64_t step, uint64_t sub) {
    const uint64_t bits = counter_hash(seed, stream, step, sub) >> 11;  // 53 bits
    return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

// Standard normal via Box-Muller on two counter draws.
double normal(uint64_t seed, uint64_t stream, uint64_t step);

// Uniform double in [lo, hi).
inline double uniform_range(uint64_t seed, uint64_t stream, uint64_t step, double lo, double hi) {
    const uint64_t bits = counter_hash(seed, stream, step, 0x75BCu) >> 11;
    return lo + (hi - lo) * (static_cast<double>(bits) * 0x1.0p-53);
}

// Per-realization seed derived from the experiment base seed.
inline uint64_t realization_seed(uint64_t base_seed, uint64_t index) {
    return counter_hash(base_seed, index, 0x5EEDu, 0);
}

}  // namespace fwmpair::rng
