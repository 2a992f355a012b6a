#pragma once

#include <cstdint>
#include <random>

namespace copieslab {

// splitmix64: used to derive independent sub-seeds so that sample #i of a run
// is reproducible from (seed, i) alone, independent of threading or ordering.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(stream)));
}

// Uniform draw from [0, n) via rejection.  std::uniform_int_distribution is
// implementation-defined, so we avoid it: report bytes must not depend on the
// standard library in use.
inline std::uint64_t rng_below(std::mt19937_64& gen, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
        r = gen();
    } while (r >= limit);
    return r % n;
}

inline bool rng_bool(std::mt19937_64& gen) { return (gen() >> 63) != 0; }

}  // namespace copieslab
