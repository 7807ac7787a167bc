#pragma once

#include <cstdint>
#include <random>

namespace thermoinfo {

__extension__ using uint128 = unsigned __int128;

/// SplitMix64 finaliser; spreads consecutive user seeds across the state space.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// 64-bit Mersenne Twister (std::mt19937_64) seeded with splitmix64(seed).
/// Integer and real draws are implemented here rather than via <random>
/// distributions, whose output differs across standard libraries. Same seed,
/// same stream, everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift
    /// with rejection, so unbiased.
    std::uint64_t below(std::uint64_t bound) {
        uint128 m = static_cast<uint128>(engine_()) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = -bound % bound;
            while (low < threshold) {
                m = static_cast<uint128>(engine_()) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace thermoinfo
