#pragma once

#include <cstdint>

namespace tuza {

/// SplitMix64 finalizer; bijective 64-bit mix.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Uniform [0,1) from the first output of the stream keyed by (seed, key).
inline double keyed_uniform(std::uint64_t seed, std::uint64_t key) {
    const std::uint64_t bits = splitmix64(splitmix64(seed) ^ splitmix64(key ^ 0x5851f42d4c957f2dULL));
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace tuza
