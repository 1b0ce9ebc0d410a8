#pragma once

#include <cstdint>
#include <limits>

namespace rlc {

/// SplitMix64 (Steele, Lea & Flood). Small, fast and fully specified, so a
/// (master, stream) pair replays bit-identically on every platform.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state = 0) noexcept : state_(state) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return finalize(state_);
  }

  /// Unbiased draw from [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = (*this)();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  std::uint64_t state() const noexcept { return state_; }

  static constexpr std::uint64_t finalize(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Identifies one trial: the run's master seed and the trial index.
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;

  /// Generator state for this trial; a pure function of (master, stream).
  SplitMix64 generator() const noexcept {
    return SplitMix64(SplitMix64::finalize(master ^ SplitMix64::finalize(stream + 0x632be59bd9b4e019ULL)));
  }

  friend bool operator==(const Seed&, const Seed&) = default;
};

}  // namespace rlc
