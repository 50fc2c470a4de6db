#pragma once

#include <cstdint>

namespace cnct {

// 64-bit linear congruential generator used for every seeded sample, so that
// sampled test sets are reproducible across implementations:
//
//   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
//   output = state >> 32
//
// The state starts at the seed; the first output is taken after one step.
class Lcg {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit constexpr Lcg(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint32_t next() noexcept {
    state_ = state_ * kMultiplier + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  // Value in [0, bound), by plain modulo reduction. bound must be positive.
  constexpr std::uint32_t below(std::uint32_t bound) noexcept { return next() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace cnct
