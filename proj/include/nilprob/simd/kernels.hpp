#pragma once

// Data-parallel inner loops shared by the exact counting paths and the
// permutation arithmetic. Every kernel has a scalar reference version; the
// AVX2 and NEON variants must agree with it bit for bit.
//
// Tables are row-major n*n arrays of element indices with mul[a*n+b] = a*b.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace nilprob::simd {

struct KernelTable {
  const char* name;

  // out[j] = [g, us[j]] = g^-1 * us[j]^-1 * g * us[j]
  void (*commutator_batch)(const std::uint32_t* mul, const std::uint32_t* inv,
                           std::uint32_t n, std::uint32_t g,
                           const std::uint32_t* us, std::uint32_t* out,
                           std::size_t len);

  // #{j : g*us[j] == us[j]*g}
  std::uint64_t (*count_commuting)(const std::uint32_t* mul, std::uint32_t n,
                                   std::uint32_t g, const std::uint32_t* us,
                                   std::size_t len);

  // sum_i w[i]*c[i], wrapping mod 2^64. Callers prove the true sum fits.
  std::uint64_t (*dot_u64_u32)(const std::uint64_t* w, const std::uint32_t* c,
                               std::size_t len);

  // out[i] = table[idx[i]]
  void (*gather_u32)(const std::uint32_t* table, const std::uint32_t* idx,
                     std::uint32_t* out, std::size_t len);
};

const KernelTable& scalar_kernels();

// nullptr when the variant is not compiled in or the CPU lacks the feature.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

// The table selected at first use: best supported variant, overridable with
// NILPROB_SIMD=scalar|avx2|neon|auto.
const KernelTable& kernels();

// Tables whose flat index a*n+b would overflow a signed 32-bit gather index
// must use the scalar path.
constexpr bool gather_safe(std::uint32_t n) {
  return static_cast<std::uint64_t>(n) * n <= 0x7fffffffULL;
}

}  // namespace nilprob::simd
