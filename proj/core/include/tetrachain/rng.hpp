#ifndef TETRACHAIN_RNG_HPP
#define TETRACHAIN_RNG_HPP

#include <cstdint>

namespace tetrachain {

/// SplitMix64 (Steele, Lea, Flood 2014). State advances by the golden-ratio
/// increment 0x9e3779b97f4a7c15 and each output is passed through the
/// finalizer below. Output is identical on every platform.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }
  std::uint64_t operator()() { return next(); }

  /// Uniform integer in [0, bound) by rejection; bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return UINT64_MAX; }

 private:
  std::uint64_t state_;
};

/// Seed of the independent stream for trial `index` under `master_seed`:
/// mix(master_seed ^ mix(index + 0x9e3779b97f4a7c15)).
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) {
  return SplitMix64::mix(master_seed ^ SplitMix64::mix(index + 0x9e3779b97f4a7c15ULL));
}

}  // namespace tetrachain

#endif  // TETRACHAIN_RNG_HPP
