#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace cplc {

/// The generator used everywhere randomness is needed. mt19937_64 output is
/// fixed by the C++ standard, so seeded runs agree across platforms.
using Rng = std::mt19937_64;

/// SplitMix64 step; used to derive independent child seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream));
}

// Uniform integer in [0, bound) by rejection. std::uniform_int_distribution
// is implementation-defined, this is not.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= limit) return x % bound;
  }
}

inline bool fair_coin(Rng& rng) { return (rng() >> 63) != 0; }

template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[uniform_below(rng, i)]);
  }
}

}  // namespace cplc
