#pragma once

#include <cstdint>

#include "csra/types.hpp"

namespace csra {

// splitmix64 (Steele & Vigna's public-domain constants). Chosen over
// std::mt19937 so the exact stream is trivial to restate in any language:
// fixtures and simulator output depend only on the seed and the documented
// draw order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform integer in [0, n), n > 0. Debiased by rejection on the top
    // multiple of n.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
        std::uint64_t draw = next();
        while (draw > limit) {
            draw = next();
        }
        return draw % n;
    }

    // Uniform integer in [lo, hi); returns lo when the range is empty.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        if (hi <= lo) {
            return lo;
        }
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo)));
    }

    // Uniform double in [0, 1) with 53 random bits.
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return real() < p; }

    // Knuth's product method; fine for the small means used here.
    std::uint64_t poisson(double mean);

private:
    std::uint64_t state_;
};

} // namespace csra
