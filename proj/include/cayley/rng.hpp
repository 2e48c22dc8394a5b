#pragma once

#include <cstdint>

namespace cayley {

/// splitmix64; deterministic across platforms, unlike <random> distributions.
struct Rng {
    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n); n > 0.
    uint64_t uniform(uint64_t n) { return next() % n; }

    /// Uniform in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(uniform(static_cast<uint64_t>(hi - lo + 1)));
    }

    uint64_t state;
};

}  // namespace cayley
