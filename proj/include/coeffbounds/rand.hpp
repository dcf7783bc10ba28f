#pragma once

#include <complex>
#include <random>

namespace coeffbounds {

// 53-bit uniform in [0,1); bit-reproducible for a fixed mt19937_64 stream
// (the engine is standardized, distributions are not).
inline double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1.0p-53;
}

// Uniform over the closed unit disk by rejection from the square.
inline std::complex<double> random_unit_disk(std::mt19937_64& rng) {
    for (;;) {
        const double x = 2.0 * uniform01(rng) - 1.0;
        const double y = 2.0 * uniform01(rng) - 1.0;
        if (x * x + y * y <= 1.0) return {x, y};
    }
}

} // namespace coeffbounds
