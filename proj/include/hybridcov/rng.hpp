#pragma once

#include <cstdint>
#include <limits>

namespace hybridcov {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// xoshiro256** (Blackman and Vigna), state filled from splitmix64 as the
/// authors recommend. Satisfies UniformRandomBitGenerator.
class Xoshiro256ss {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256ss(std::uint64_t seed = 0) {
        for (auto& w : s_) {
            seed += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = seed;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            w = z ^ (z >> 31);
        }
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        const std::uint64_t out = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return out;
    }

    friend bool operator==(const Xoshiro256ss&, const Xoshiro256ss&) = default;

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

using Rng = Xoshiro256ss;

/// Uniform double on [0, 1) from the top 53 bits.
template <class URNG>
inline double uniform01(URNG& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Independent substream for (seed, trial, lane). Each Monte Carlo trial owns
/// its streams, so results do not depend on how trials are scheduled.
inline Rng substream(std::uint64_t seed, std::uint64_t trial, std::uint64_t lane = 0) {
    const std::uint64_t key = splitmix64(splitmix64(seed) ^ splitmix64(trial * 0x100000001B3ULL + lane));
    return Rng(key);
}

}  // namespace hybridcov
