#include "tetrachain/rng.hpp"

#include <stdexcept>

namespace tetrachain {

std::uint64_t SplitMix64::uniform_below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("uniform_below needs a positive bound");
  }
  // Values below `threshold` would make the low residues more likely.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = next();
    if (r >= threshold) {
      return r % bound;
    }
  }
}

}  // namespace tetrachain
