#pragma once

#include <cstdint>

namespace hopforge {

// splitmix64: seedable, portable, identical streams on every platform.
// std::mt19937 would be portable too, but uniform_int_distribution is not,
// so we roll the whole stream by hand.
class rng {
public:
    explicit rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound >= 1, by rejection
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // uniform integer in [lo, hi] inclusive
    std::int64_t next_range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // uniform double in [0, 1)
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return next_double() < p; }

private:
    std::uint64_t state_;
};

} // namespace hopforge
