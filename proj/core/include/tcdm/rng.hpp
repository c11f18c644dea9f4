#pragma once

#include <cstdint>

namespace tcdm {

/// 64-bit linear congruential generator (Knuth MMIX multiplier/increment),
/// state advances as s <- s * 6364136223846793005 + 1442695040888963407
/// modulo 2^64. Doubles take the top 53 bits, so identical seeds reproduce
/// identical streams on any platform with 64-bit integer arithmetic. This is
/// the generator behind every seeded dataset and solver start block; the
/// constants are part of the on-disk reproducibility contract.
class Lcg64 {
public:
    explicit Lcg64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_;
    }

    /// uniform double in [0, 1)
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// uniform double in [lo, hi)
    double next_double(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    /// uniform integer in [0, bound)
    std::uint64_t next_below(std::uint64_t bound) {
        return next_u64() % bound;
    }

private:
    std::uint64_t state_;
};

} // namespace tcdm
