#pragma once

#include <cstdint>
#include <random>

#include "dualcore/errors.hpp"

namespace dualcore {

// Deterministic RNG for reproducible experiments. mt19937_64 output is fully
// specified by the standard; the integer draw below uses rejection sampling
// instead of std::uniform_int_distribution, whose mapping is
// implementation-defined and would break byte-identical reports across
// toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform integer in [lo, hi], inclusive.
    long uniform_int(long lo, long hi) {
        require(lo <= hi, "uniform_int: empty range");
        const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1u;
        if (range == 0) return static_cast<long>(next_u64()); // full 64-bit range
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return lo + static_cast<long>(x % range);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace dualcore
