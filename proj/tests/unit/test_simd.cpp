#include <doctest.h>

#include <random>
#include <vector>

#include "nilprob/catalog.hpp"
#include "nilprob/simd/kernels.hpp"

using namespace nilprob;

namespace {

std::vector<const simd::KernelTable*> variants() {
  std::vector<const simd::KernelTable*> out;
  if (simd::avx2_kernels()) out.push_back(simd::avx2_kernels());
  if (simd::neon_kernels()) out.push_back(simd::neon_kernels());
  return out;
}

}  // namespace

TEST_CASE("active kernel table is one of the known variants") {
  const std::string name = simd::kernels().name;
  CHECK((name == "scalar" || name == "avx2" || name == "neon"));
  MESSAGE("active SIMD backend: " << name);
}

TEST_CASE("commutator and centralizer kernels agree with the scalar reference") {
  const auto& ref = simd::scalar_kernels();
  std::mt19937_64 rng(7);
  for (const char* name : {"S(3)", "Q8", "S(4)xC(3)", "SL(2,3)", "A(5)"}) {
    const GroupTable g = catalog_get(name);
    std::uniform_int_distribution<Element> pick(0, g.order() - 1);
    for (const auto* k : variants()) {
      for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 17u, 64u}) {
        std::vector<Element> us(len);
        for (auto& u : us) u = pick(rng);
        for (int trial = 0; trial < 10; ++trial) {
          const Element x = pick(rng);
          std::vector<Element> a(len), b(len);
          ref.commutator_batch(g.table_data(), g.inv_data(), g.order(), x, us.data(), a.data(), len);
          k->commutator_batch(g.table_data(), g.inv_data(), g.order(), x, us.data(), b.data(), len);
          CHECK(a == b);
          CHECK(ref.count_commuting(g.table_data(), g.order(), x, us.data(), len) ==
                k->count_commuting(g.table_data(), g.order(), x, us.data(), len));
        }
      }
    }
  }
}

TEST_CASE("dot product kernel wraps identically on full-width inputs") {
  const auto& ref = simd::scalar_kernels();
  std::mt19937_64 rng(11);
  for (const auto* k : variants()) {
    for (std::size_t len : {0u, 1u, 3u, 4u, 5u, 31u, 1000u}) {
      std::vector<std::uint64_t> w(len);
      std::vector<std::uint32_t> c(len);
      for (auto& v : w) v = rng();
      for (auto& v : c) v = static_cast<std::uint32_t>(rng());
      CHECK(ref.dot_u64_u32(w.data(), c.data(), len) == k->dot_u64_u32(w.data(), c.data(), len));
    }
  }
}

TEST_CASE("gather kernel agrees with the scalar reference") {
  const auto& ref = simd::scalar_kernels();
  std::mt19937_64 rng(3);
  std::vector<std::uint32_t> table(257);
  for (auto& v : table) v = static_cast<std::uint32_t>(rng());
  std::uniform_int_distribution<std::uint32_t> pick(0, 256);
  for (const auto* k : variants()) {
    for (std::size_t len : {0u, 5u, 8u, 13u, 100u}) {
      std::vector<std::uint32_t> idx(len), a(len), b(len);
      for (auto& v : idx) v = pick(rng);
      ref.gather_u32(table.data(), idx.data(), a.data(), len);
      k->gather_u32(table.data(), idx.data(), b.data(), len);
      CHECK(a == b);
    }
  }
}

TEST_CASE("gather_safe bound") {
  CHECK(simd::gather_safe(4096));
  CHECK(simd::gather_safe(46340));
  CHECK_FALSE(simd::gather_safe(46341));
}
