#pragma once

#include <cstdint>

namespace nalg {

// Deterministic 64-bit generator (splitmix64). Used wherever seeded
// reproducible streams are needed; std engines are portable but the standard
// distributions are not byte-stable across implementations.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform-ish integer in [lo, hi]; good enough for test populations.
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

}  // namespace nalg
