#pragma once

#include <cstdint>
#include <random>

namespace percograph {

// All randomness flows through caller-supplied streams so that every run is
// reproducible from (seed, inputs) alone.  Streams for independent units of
// work (one per trial, one per grid point) are derived from a base seed and
// lane indices instead of sharing a generator across threads; results are then
// independent of scheduling and of the worker count.

using RandomStream = std::mt19937_64;

// SplitMix64 finalizer.  Doubles as the seed scrambler for derive_stream and
// as the hash for packed edge keys.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent stream for lane (lane0, lane1) under a base seed.  Mixing each
// component through SplitMix64 keeps nearby lanes decorrelated even for
// consecutive seeds and indices.
inline RandomStream derive_stream(std::uint64_t seed,
                                  std::uint64_t lane0 = 0,
                                  std::uint64_t lane1 = 0) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ (lane0 + 0x632be59bd9b4e019ULL));
    s = splitmix64(s ^ (lane1 + 0x9e3779b97f4a7c15ULL));
    return RandomStream{s};
}

// One engine draw -> double in [0,1) with 53 random mantissa bits.  Avoids
// uniform_real_distribution so the mapping is pinned to exactly one draw per
// call (percolation consumes one draw per edge, in canonical edge order).
inline double canonical_double(RandomStream& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(RandomStream& rng, double p) {
    return canonical_double(rng) < p;
}

// Unbiased-enough index in [0, bound) via Lemire's multiply-shift reduction;
// one draw per call.  bound must be positive.
inline std::uint64_t uniform_index(RandomStream& rng, std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

inline long long binomial_draw(RandomStream& rng, long long t, double p) {
    if (t <= 0 || p <= 0.0) return 0;
    if (p >= 1.0) return t;
    std::binomial_distribution<long long> dist(t, p);
    return dist(rng);
}

// Entropy for runs where the caller did not pin a seed; the drawn value is
// always reported back so the run can be replayed.
inline std::uint64_t fresh_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

} // namespace percograph
