#pragma once

// Deterministic 64-bit generator (splitmix64) with stateless substream
// derivation, so every (phase, event) draw depends only on the seed and the
// indices, never on how much randomness other events consumed or on thread
// scheduling.

#include <cstdint>

namespace acc {

inline constexpr const char* rng_name = "acc-splitmix64/v1";

namespace detail {
inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace detail

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += detail::golden_gamma);
        return detail::mix64(z);
    }

    /// Uniform double strictly inside (0,1): 53-bit mantissa offset by half
    /// an ulp so 0 and 1 are unreachable.
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

/// Substream seed for stream (hi, lo) under a master seed.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t hi,
                                        std::uint64_t lo) {
    const std::uint64_t a = detail::mix64(seed + detail::golden_gamma * (hi + 1));
    return detail::mix64(a + detail::golden_gamma * (lo + 1));
}

inline SplitMix64 substream(std::uint64_t seed, std::uint64_t hi, std::uint64_t lo) {
    return SplitMix64(derive_stream_seed(seed, hi, lo));
}

}  // namespace acc
