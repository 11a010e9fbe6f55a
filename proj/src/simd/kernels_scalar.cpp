#include "nilprob/simd/kernels.hpp"

namespace nilprob::simd {
namespace {

void commutator_batch(const std::uint32_t* mul, const std::uint32_t* inv,
                      std::uint32_t n, std::uint32_t g, const std::uint32_t* us,
                      std::uint32_t* out, std::size_t len) {
  const std::uint32_t* row_ig = mul + static_cast<std::size_t>(inv[g]) * n;
  const std::uint32_t* row_g = mul + static_cast<std::size_t>(g) * n;
  for (std::size_t j = 0; j < len; ++j) {
    const std::uint32_t u = us[j];
    const std::uint32_t left = row_ig[inv[u]];
    const std::uint32_t right = row_g[u];
    out[j] = mul[static_cast<std::size_t>(left) * n + right];
  }
}

std::uint64_t count_commuting(const std::uint32_t* mul, std::uint32_t n,
                              std::uint32_t g, const std::uint32_t* us,
                              std::size_t len) {
  const std::uint32_t* row_g = mul + static_cast<std::size_t>(g) * n;
  std::uint64_t count = 0;
  for (std::size_t j = 0; j < len; ++j) {
    const std::uint32_t u = us[j];
    count += row_g[u] == mul[static_cast<std::size_t>(u) * n + g];
  }
  return count;
}

std::uint64_t dot_u64_u32(const std::uint64_t* w, const std::uint32_t* c,
                          std::size_t len) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < len; ++i) sum += w[i] * c[i];
  return sum;
}

void gather_u32(const std::uint32_t* table, const std::uint32_t* idx,
                std::uint32_t* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) out[i] = table[idx[i]];
}

constexpr KernelTable kScalar{"scalar", commutator_batch, count_commuting,
                              dot_u64_u32, gather_u32};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace nilprob::simd
