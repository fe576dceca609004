#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace auxclust {

// Deterministic 64-bit PRNG used everywhere randomness is needed.
// std::mt19937_64 has a standardized output sequence; the bounded draws
// below avoid std::uniform_*_distribution, whose mapping is
// implementation-defined, so identical seeds give identical results on
// every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform integer in [0, n). Rejection sampling keeps the draw unbiased.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t rem = (max % n + 1) % n;  // 2^64 mod n
        const std::uint64_t limit = max - rem;        // accepted range size is a multiple of n
        std::uint64_t r = gen_();
        while (r > limit) r = gen_();
        return r % n;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

}  // namespace auxclust
