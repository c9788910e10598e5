#ifndef HULLCERT_RNG_HPP
#define HULLCERT_RNG_HPP

#include <cmath>
#include <random>

namespace hullcert {

// Seeded, platform-independent draws (std::*_distribution is
// implementation-defined, which would break byte-identical reports).

inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& g, double lo, double hi) {
    return lo + (hi - lo) * uniform01(g);
}

inline double normal(std::mt19937_64& g) {
    const double u1 = std::max(uniform01(g), 1e-300);
    const double u2 = uniform01(g);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

inline double cauchy(std::mt19937_64& g) {
    return std::tan(3.141592653589793 * (uniform01(g) - 0.5));
}

} // namespace hullcert

#endif
