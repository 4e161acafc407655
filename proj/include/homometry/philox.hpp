#pragma once

#include <array>
#include <cstdint>

namespace homometry {

/// Philox4x32-10 block function: a keyed bijection on 128-bit counters.
/// Output depends only on (key, counter), so random fields indexed by
/// lattice position can be generated in any order.
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    explicit constexpr Philox4x32(std::uint64_t seed) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}
    constexpr Philox4x32(Key key) noexcept : key_(key) {}

    constexpr Counter operator()(Counter ctr) const noexcept {
        Key k = key_;
        for (int round = 0; round < 10; ++round) {
            ctr = single_round(ctr, k);
            k[0] += kWeylA;
            k[1] += kWeylB;
        }
        return ctr;
    }

    /// Uniform double in [0, 1) with 53 random bits, from counter (lo, hi).
    constexpr double uniform(std::uint64_t lo, std::uint64_t hi = 0) const noexcept {
        const Counter out = (*this)({static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(lo >> 32),
                                     static_cast<std::uint32_t>(hi), static_cast<std::uint32_t>(hi >> 32)});
        const std::uint64_t bits = (static_cast<std::uint64_t>(out[0]) << 32 | out[1]) >> 11;
        return static_cast<double>(bits) * 0x1.0p-53;
    }

    constexpr Key key() const noexcept { return key_; }

private:
    static constexpr std::uint32_t kWeylA = 0x9E3779B9;
    static constexpr std::uint32_t kWeylB = 0xBB67AE85;
    static constexpr std::uint32_t kMulA = 0xD2511F53;
    static constexpr std::uint32_t kMulB = 0xCD9E8D57;

    static constexpr Counter single_round(const Counter& c, const Key& k) noexcept {
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMulA) * c[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMulB) * c[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
        return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    }

    Key key_;
};

}  // namespace homometry
