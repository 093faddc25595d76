#pragma once

#include <cstdint>
#include <cmath>

namespace smlab {

/// Counter-based generator: each draw is a pure hash of (seed, counters),
/// so parallel or reordered generation yields identical streams.
struct CounterRng {
    std::uint64_t seed = 0;

    static std::uint64_t mix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    std::uint64_t bits(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) const {
        return mix(mix(mix(seed ^ 0x243f6a8885a308d3ULL) ^ a) ^ mix(b ^ mix(c)));
    }

    /// Uniform in (0, 1].
    double uniform(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) const {
        return (static_cast<double>(bits(a, b, c) >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal (Box-Muller on two keyed uniforms).
    double normal(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0) const {
        const double u1 = uniform(a, b, c * 2 + 1);
        const double u2 = uniform(a, b, c * 2 + 2);
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.28318530717958647692 * u2);
    }
};

}  // namespace smlab
