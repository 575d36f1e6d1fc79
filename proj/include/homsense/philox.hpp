#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
//
// Output is a pure function of (key, counter), so any consumer can be given
// its own stream: here the key is the 64-bit run seed and the counter encodes
// (stream index, block index). Parallel and serial traversals of the same
// streams are bit-identical by construction.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace homsense {

namespace detail {

inline constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                                  std::array<std::uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * ctr[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * ctr[2];
        const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += kPhiloxW0;
        key[1] += kPhiloxW1;
    }
    return ctr;
}

}  // namespace detail

/// One independent random stream: (seed, stream) fixed, blocks consumed in
/// order. 2 x u64 per Philox block.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
          stream_(stream) {}

    std::uint64_t next_u64() {
        if (have_ == 0) refill();
        --have_;
        const std::uint64_t v = buf_[1 - have_];
        return v;
    }

    /// Uniform on (0, 1]; never 0, so it is safe under log().
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal deviate (Box-Muller; two uniforms per call).
    double next_normal() {
        const double u1 = next_unit();
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

  private:
    void refill() {
        const std::array<std::uint32_t, 4> out = detail::philox4x32_10(
            {static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32),
             static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32)},
            key_);
        ++block_;
        buf_[0] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
        buf_[1] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
        have_ = 2;
    }

    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_ = 0;
    std::uint64_t block_ = 0;
    std::array<std::uint64_t, 2> buf_{};
    int have_ = 0;
};

/// Deterministic child seed for trial/worker `index` under `master` (one
/// Philox block in a reserved stream, so child streams never collide with
/// event streams).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    const std::array<std::uint32_t, 4> out = detail::philox4x32_10(
        {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
         0xFFFFFFFFu, 0xFFFFFFFFu},
        {static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32)});
    return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

}  // namespace homsense
