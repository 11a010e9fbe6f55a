#include "nilprob/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define NILPROB_HAVE_AVX2 1
#include <immintrin.h>
#else
#define NILPROB_HAVE_AVX2 0
#endif

namespace nilprob::simd {

#if NILPROB_HAVE_AVX2
namespace {

// Only raw pointers cross into these functions; no std templates are
// instantiated under the avx2 target.
#define NILPROB_AVX2 __attribute__((target("avx2")))

NILPROB_AVX2 void commutator_batch(const std::uint32_t* mul,
                                   const std::uint32_t* inv, std::uint32_t n,
                                   std::uint32_t g, const std::uint32_t* us,
                                   std::uint32_t* out, std::size_t len) {
  const std::uint32_t ig = inv[g];
  const int* row_ig = reinterpret_cast<const int*>(mul + static_cast<std::size_t>(ig) * n);
  const int* row_g = reinterpret_cast<const int*>(mul + static_cast<std::size_t>(g) * n);
  const int* base = reinterpret_cast<const int*>(mul);
  const int* inv_i = reinterpret_cast<const int*>(inv);
  const __m256i vn = _mm256_set1_epi32(static_cast<int>(n));
  std::size_t j = 0;
  for (; j + 8 <= len; j += 8) {
    const __m256i u = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(us + j));
    const __m256i iu = _mm256_i32gather_epi32(inv_i, u, 4);
    const __m256i left = _mm256_i32gather_epi32(row_ig, iu, 4);
    const __m256i right = _mm256_i32gather_epi32(row_g, u, 4);
    const __m256i idx = _mm256_add_epi32(_mm256_mullo_epi32(left, vn), right);
    const __m256i r = _mm256_i32gather_epi32(base, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), r);
  }
  for (; j < len; ++j) {
    const std::uint32_t u = us[j];
    const std::uint32_t left = mul[static_cast<std::size_t>(ig) * n + inv[u]];
    const std::uint32_t right = mul[static_cast<std::size_t>(g) * n + u];
    out[j] = mul[static_cast<std::size_t>(left) * n + right];
  }
}

NILPROB_AVX2 std::uint64_t count_commuting(const std::uint32_t* mul,
                                           std::uint32_t n, std::uint32_t g,
                                           const std::uint32_t* us,
                                           std::size_t len) {
  const int* row_g = reinterpret_cast<const int*>(mul + static_cast<std::size_t>(g) * n);
  const int* base = reinterpret_cast<const int*>(mul);
  const __m256i vn = _mm256_set1_epi32(static_cast<int>(n));
  const __m256i vg = _mm256_set1_epi32(static_cast<int>(g));
  std::uint64_t count = 0;
  std::size_t j = 0;
  for (; j + 8 <= len; j += 8) {
    const __m256i u = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(us + j));
    const __m256i gu = _mm256_i32gather_epi32(row_g, u, 4);
    const __m256i ug = _mm256_i32gather_epi32(
        base, _mm256_add_epi32(_mm256_mullo_epi32(u, vn), vg), 4);
    const int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(gu, ug)));
    count += static_cast<std::uint64_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  for (; j < len; ++j) {
    const std::uint32_t u = us[j];
    count += mul[static_cast<std::size_t>(g) * n + u] ==
             mul[static_cast<std::size_t>(u) * n + g];
  }
  return count;
}

NILPROB_AVX2 std::uint64_t dot_u64_u32(const std::uint64_t* w,
                                       const std::uint32_t* c, std::size_t len) {
  // w*c mod 2^64 = lo32(w)*c + (hi32(w)*c << 32)
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256i wv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
    const __m256i cv = _mm256_cvtepu32_epi64(
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(c + i)));
    const __m256i lo = _mm256_mul_epu32(wv, cv);
    const __m256i hi = _mm256_mul_epu32(_mm256_srli_epi64(wv, 32), cv);
    acc = _mm256_add_epi64(acc, _mm256_add_epi64(lo, _mm256_slli_epi64(hi, 32)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < len; ++i) sum += w[i] * c[i];
  return sum;
}

NILPROB_AVX2 void gather_u32(const std::uint32_t* table, const std::uint32_t* idx,
                             std::uint32_t* out, std::size_t len) {
  const int* base = reinterpret_cast<const int*>(table);
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256i ix = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                        _mm256_i32gather_epi32(base, ix, 4));
  }
  for (; i < len; ++i) out[i] = table[idx[i]];
}

#undef NILPROB_AVX2

constexpr KernelTable kAvx2{"avx2", commutator_batch, count_commuting,
                            dot_u64_u32, gather_u32};

}  // namespace

const KernelTable* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
}

#else

const KernelTable* avx2_kernels() { return nullptr; }

#endif

}  // namespace nilprob::simd
