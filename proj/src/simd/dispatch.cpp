#include <cstdlib>
#include <string_view>

#include "nilprob/simd/kernels.hpp"

namespace nilprob::simd {
namespace {

const KernelTable& select() {
  const char* env = std::getenv("NILPROB_SIMD");
  const std::string_view want = env ? env : "auto";
  if (want == "scalar") return scalar_kernels();
  if (want == "avx2" && avx2_kernels()) return *avx2_kernels();
  if (want == "neon" && neon_kernels()) return *neon_kernels();
  if (avx2_kernels()) return *avx2_kernels();
  if (neon_kernels()) return *neon_kernels();
  return scalar_kernels();
}

}  // namespace

const KernelTable& kernels() {
  static const KernelTable& active = select();
  return active;
}

}  // namespace nilprob::simd
