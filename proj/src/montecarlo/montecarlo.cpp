#include "nilprob/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "nilprob/errors.hpp"
#include "nilprob/rng.hpp"

namespace nilprob {

nlohmann::json to_json(const EstimateResult& r) {
  return {{"hits", r.hits},         {"samples", r.samples}, {"point", r.point},
          {"ci_low", r.ci_low},     {"ci_high", r.ci_high}, {"z", r.z},
          {"seed", r.seed},         {"k", r.k},             {"chunk_size", r.chunk_size},
          {"chunks", r.chunks}};
}

std::pair<double, double> wilson_ci(std::uint64_t hits, std::uint64_t samples, double z) {
  if (samples == 0) throw InvalidCounts("wilson interval needs at least one sample");
  if (hits > samples) throw InvalidCounts("hits exceed samples");
  if (!(z > 0)) throw InvalidCounts("z must be positive");
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double center = (p + z2 / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / denom;
  double low = hits == 0 ? 0.0 : std::clamp(center - half, 0.0, 1.0);
  double high = hits == samples ? 1.0 : std::clamp(center + half, 0.0, 1.0);
  return {std::min(low, p), std::max(high, p)};
}

namespace {

// [x_1, ..., x_L] == 1 for images stored back to back in `tuple`.
class CommutatorTest {
 public:
  explicit CommutatorTest(std::uint32_t degree)
      : n_(degree), acc_(degree), acc_inv_(degree), x_inv_(degree), tmp_(degree) {}

  bool trivial(const std::vector<Permutation>& xs) {
    const auto first = xs[0].images();
    std::copy(first.begin(), first.end(), acc_.begin());
    for (std::size_t j = 1; j < xs.size(); ++j) {
      const auto x = xs[j].images();
      for (std::uint32_t i = 0; i < n_; ++i) {
        acc_inv_[acc_[i]] = i;
        x_inv_[x[i]] = i;
      }
      // apply acc^-1, x^-1, acc, x in turn
      for (std::uint32_t i = 0; i < n_; ++i) tmp_[i] = x[acc_[x_inv_[acc_inv_[i]]]];
      acc_.swap(tmp_);
    }
    for (std::uint32_t i = 0; i < n_; ++i)
      if (acc_[i] != i) return false;
    return true;
  }

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> acc_, acc_inv_, x_inv_, tmp_;
};

std::uint64_t run_chunk(const PermGroupBSGS& g, std::uint32_t length, std::uint64_t seed,
                        std::uint64_t chunk, std::uint64_t count) {
  Rng rng(derive_seed(seed, chunk));
  CommutatorTest test(g.degree());
  std::vector<Permutation> xs(length);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < count; ++s) {
    for (auto& x : xs) x = g.random_uniform(rng);
    hits += test.trivial(xs);
  }
  return hits;
}

}  // namespace

EstimateResult estimate_np(const PermGroupBSGS& g, const EstimateOptions& options) {
  if (options.samples == 0) throw InvalidCounts("samples must be at least 1");
  if (options.k == 0) throw DefinitionError("k must be at least 1");
  if (options.chunk_size == 0) throw DefinitionError("chunk size must be positive");
  if (!(options.z > 0)) throw InvalidCounts("z must be positive");

  const std::uint64_t chunks = (options.samples + options.chunk_size - 1) / options.chunk_size;
  const auto chunk_len = [&](std::uint64_t c) {
    return std::min(options.chunk_size, options.samples - c * options.chunk_size);
  };
  std::vector<std::uint64_t> hits(chunks, 0);
  const unsigned threads =
      static_cast<unsigned>(std::clamp<std::uint64_t>(options.threads == 0 ? 1 : options.threads, 1, chunks));
  if (threads == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c)
      hits[c] = run_chunk(g, options.k + 1, options.seed, c, chunk_len(c));
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;)
          hits[c] = run_chunk(g, options.k + 1, options.seed, c, chunk_len(c));
      });
  }

  EstimateResult r;
  for (auto h : hits) r.hits += h;
  r.samples = options.samples;
  r.point = static_cast<double>(r.hits) / static_cast<double>(r.samples);
  std::tie(r.ci_low, r.ci_high) = wilson_ci(r.hits, r.samples, options.z);
  r.z = options.z;
  r.seed = options.seed;
  r.k = options.k;
  r.chunk_size = options.chunk_size;
  r.chunks = chunks;
  return r;
}

}  // namespace nilprob
