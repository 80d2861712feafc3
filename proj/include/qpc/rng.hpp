#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace qpc {

/// Counter-based Gaussian noise: sample k of a stream is a pure function of
/// (seed, k), so runs are reproducible and streams can be evaluated in any
/// order. The underlying integer sequence is splitmix64, which is
/// platform-independent; the Box-Muller mapping inherits libm's last-ulp
/// behaviour.
namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Uniform in (0, 1]: top 53 bits, offset so log() never sees zero.
inline double uniform01(std::uint64_t bits) {
    return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

/// Standard normal draw for stream `seed` at position `index`.
inline double gaussian(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t a = splitmix64(seed ^ splitmix64(index));
    const std::uint64_t b = splitmix64(a ^ 0xD1B54A32D192ED03ull);
    const double u1 = uniform01(a);
    const double u2 = uniform01(b);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace rng

}  // namespace qpc
