#pragma once

#include <cstdint>
#include <random>

namespace cslnc {

// mt19937_64 output is specified by the standard; the std distributions are not,
// so bounded draws go through uniform_below to stay reproducible across toolchains.
using Rng = std::mt19937_64;

/// Uniform integer in [0, n), n >= 1. Rejection sampling on the top of the range.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % n;
}

inline bool coin(Rng& rng) { return rng() >> 63; }

/// Counter-mode seed for trial `index` under `master` (splitmix64 finaliser).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace cslnc
