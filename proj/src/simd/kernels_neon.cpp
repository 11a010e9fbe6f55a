#include "nilprob/simd/kernels.hpp"

#if defined(__aarch64__) || defined(__ARM_NEON)
#include <arm_neon.h>
#define NILPROB_HAVE_NEON 1
#else
#define NILPROB_HAVE_NEON 0
#endif

namespace nilprob::simd {

#if NILPROB_HAVE_NEON
namespace {

// NEON has no gather, so only the dot product is vectorized; the rest
// forward to the scalar reference.
std::uint64_t dot_u64_u32(const std::uint64_t* w, const std::uint32_t* c,
                          std::size_t len) {
  uint64x2_t acc_lo = vdupq_n_u64(0);
  uint64x2_t acc_hi = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const uint64x2_t wv = vld1q_u64(w + i);
    const uint32x2_t cv = vld1_u32(c + i);
    acc_lo = vmlal_u32(acc_lo, vmovn_u64(wv), cv);
    acc_hi = vmlal_u32(acc_hi, vshrn_n_u64(wv, 32), cv);
  }
  std::uint64_t sum = vgetq_lane_u64(acc_lo, 0) + vgetq_lane_u64(acc_lo, 1) +
                      ((vgetq_lane_u64(acc_hi, 0) + vgetq_lane_u64(acc_hi, 1)) << 32);
  for (; i < len; ++i) sum += w[i] * c[i];
  return sum;
}

KernelTable make_neon() {
  KernelTable t = scalar_kernels();
  t.name = "neon";
  t.dot_u64_u32 = dot_u64_u32;
  return t;
}

}  // namespace

const KernelTable* neon_kernels() {
  static const KernelTable table = make_neon();
  return &table;
}

#else

const KernelTable* neon_kernels() { return nullptr; }

#endif

}  // namespace nilprob::simd
