// Seedable, portable random source for measurement sampling: the splitmix64
// finalizer over a counter. Draw i for seed s mixes the state s + (i+1)*gamma,
// so the stream can be walked sequentially or indexed at random — both give
// bit-identical values, which is what makes the sampling kernels
// order-independent and reproducible across thread counts.

#pragma once

#include <cstdint>
#include <string_view>

namespace hbsa {

// recorded in every sample report
inline constexpr std::string_view kRngId = "splitmix64/top53/invcdf-v1";

struct SplitMix64 {
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // i-th output of the stream seeded with `seed`
    static constexpr std::uint64_t at(std::uint64_t seed, std::uint64_t i) {
        return mix(seed + (i + 1) * kGamma);
    }

    // top 53 bits mapped to [0, 1)
    static constexpr double unit_at(std::uint64_t seed, std::uint64_t i) {
        return static_cast<double>(at(seed, i) >> 11) * 0x1.0p-53;
    }

    // sequential walk over the same stream
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}
    constexpr std::uint64_t next() {
        state_ += kGamma;
        return mix(state_);
    }
    constexpr double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace hbsa
