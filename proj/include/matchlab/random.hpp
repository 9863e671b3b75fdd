#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

#include "matchlab/numeric.hpp"

namespace matchlab {

/// All randomness in the library flows through a caller-owned engine of this
/// type; nothing keeps global RNG state.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; portable across standard
/// libraries, unlike std::uniform_int_distribution.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

inline u128 uniform_below(Rng& rng, u128 bound) {
  if (bound <= UINT64_MAX) return uniform_below(rng, static_cast<std::uint64_t>(bound));
  const u128 max = ~static_cast<u128>(0);
  const u128 limit = max - (max % bound);
  for (;;) {
    const u128 x = (static_cast<u128>(rng()) << 64) | rng();
    if (x < limit) return x % bound;
  }
}

template <class T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

/// Independent engine for stream `index` derived from a base seed.
inline Rng derive_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

}  // namespace matchlab
