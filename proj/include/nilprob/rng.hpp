#pragma once

#include <cstdint>
#include <random>

namespace nilprob {

/// Sampling engine: 64-bit Mersenne Twister (std::mt19937_64).
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of sub-stream `stream` under master seed `seed`. Streams are
/// independent of how they are scheduled onto threads.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(mix64(seed) ^ mix64(stream + 0x632be59bd9b4e019ULL));
}

}  // namespace nilprob
