#pragma once

#include <cstdint>

namespace xai {

// SplitMix64. The single PRNG used everywhere (datasets, weight init, masks,
// permutations) so that every artifact reproduces bit-for-bit from a seed.
// Draw order is part of each caller's contract and documented at the call site.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53-bit resolution.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform integer in [0, n). Plain modulo: bias is irrelevant next to the
    // cross-language reproducibility this buys, and n is tiny everywhere.
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

} // namespace xai
