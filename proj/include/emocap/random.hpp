#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace emocap {

// std::mt19937_64 is fully specified by the standard; the distributions in
// <random> are not, so bounded draws and shuffles are done here to keep
// results identical across standard libraries.
using Rng = std::mt19937_64;

/// Uniform integer in [0, n). n must be > 0.
inline std::uint64_t UniformIndex(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = Rng::max() - (Rng::max() % n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

/// Fair coin.
inline bool CoinFlip(Rng& rng) { return (rng() >> 63) != 0; }

template <typename T>
void Shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = UniformIndex(rng, i);
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

/// SplitMix64 finalizer; derives independent per-item seeds from one seed.
constexpr std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace emocap
