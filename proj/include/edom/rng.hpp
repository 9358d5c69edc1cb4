#pragma once

#include <cstdint>

namespace edom {

/// splitmix64: seedable, portable, identical output on every platform.
/// Every randomized routine in the library names the seed it used in its result.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Bernoulli(p) without floating-point state: compare against a fixed 64-bit threshold.
    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        auto threshold = static_cast<std::uint64_t>(p * 18446744073709551616.0L);
        return next() < threshold;
    }

    /// Uniform integer in [0, n) by rejection; n > 0.
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = ~0ull - (~0ull % n + 1) % n;
        std::uint64_t r;
        do {
            r = next();
        } while (r > limit);
        return r % n;
    }

private:
    std::uint64_t state_;
};

} // namespace edom
