#pragma once

#include <cstdint>

namespace sv {

// Deterministic 64-bit random stream (splitmix64).  All randomized routines
// take a RandomSource so that (inputs, seed) fully determine the output on
// every platform; no libc or <random> distribution is involved.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform on [0, bound), bound >= 1.  Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const std::uint64_t limit = ~0ULL - (~0ULL % bound + 1) % bound;
        for (;;) {
            std::uint64_t x = next();
            if (x <= limit) return x % bound;
        }
    }

    // Uniform on [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(
                        below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Independent child stream for trial `index`; pure in (seed, index).
    RandomSource derived(std::uint64_t index) const {
        std::uint64_t z = seed_ + (index + 1) * 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return RandomSource(z ^ (z >> 31));
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

} // namespace sv
