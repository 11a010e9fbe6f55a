#pragma once

#include <cstdint>
#include <utility>

#include <json.hpp>

#include "nilprob/bsgs.hpp"

namespace nilprob {

inline constexpr double kDefaultZ = 1.96;
inline constexpr std::uint64_t kDefaultChunkSize = 4096;

struct EstimateOptions {
  std::uint32_t k = 1;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  double z = kDefaultZ;
  // Chunk c draws from the stream derive_seed(seed, c). The hit count depends
  // on (seed, samples, chunk_size) only, never on the thread count.
  std::uint64_t chunk_size = kDefaultChunkSize;
  unsigned threads = 1;
};

struct EstimateResult {
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  double point = 0;
  double ci_low = 0;
  double ci_high = 0;
  double z = kDefaultZ;
  std::uint64_t seed = 0;
  std::uint32_t k = 1;
  std::uint64_t chunk_size = kDefaultChunkSize;
  std::uint64_t chunks = 0;
};
nlohmann::json to_json(const EstimateResult& r);

/// Wilson score interval clamped to [0, 1]. Throws InvalidCounts unless
/// samples >= 1, hits <= samples and z > 0.
std::pair<double, double> wilson_ci(std::uint64_t hits, std::uint64_t samples, double z = kDefaultZ);

/// Fraction of uniformly drawn (k+1)-tuples with trivial left-normed
/// commutator, with a Wilson interval. Throws InvalidCounts for samples == 0
/// and DefinitionError for k == 0 or chunk_size == 0.
EstimateResult estimate_np(const PermGroupBSGS& g, const EstimateOptions& options);

}  // namespace nilprob
