#pragma once

#include <cstdint>

namespace walkup {

/// xorshift64* (shifts 12, 25, 27; multiplier 0x2545F4914F6CDD1D). A zero
/// seed is replaced by 0x9E3779B97F4A7C15 since zero is a fixed point.
class Xorshift64Star {
 public:
  explicit constexpr Xorshift64Star(std::uint64_t seed) noexcept
      : state_(seed == 0 ? 0x9E3779B97F4A7C15ULL : seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform in [0, bound) by rejection; bound must be positive.
  constexpr std::uint64_t uniform(std::uint64_t bound) noexcept {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace walkup
