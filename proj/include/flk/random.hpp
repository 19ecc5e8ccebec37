#pragma once

#include <cstdint>
#include <random>

namespace flk {

using Rng = std::mt19937_64;

// std::uniform_int_distribution is implementation-defined; reports must be
// byte-identical across standard libraries, so draws go through this.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

}  // namespace flk
