#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nilprob/bigint.hpp"
#include "nilprob/group_table.hpp"
#include "nilprob/structure.hpp"

namespace nilprob::detail {

// Stage-by-stage commutator distribution for a fixed (G, H, L). Counts are
// machine words when |H|^L < 2^64, which bounds every partial sum, and
// arbitrary precision otherwise.
class NpEngine {
 public:
  struct State {
    std::vector<Element> support;  // elements with nonzero weight, ascending
    std::vector<std::uint64_t> narrow;
    std::vector<BigInt> wide;
  };

  NpEngine(const GroupTable& g, const SubgroupRef& h, std::uint32_t length,
           bool force_wide = false);

  bool wide() const noexcept { return wide_; }
  const BigInt& total() const noexcept { return total_; }

  State start(Element x) const;                           // W_1
  State step(const State& w, Element x) const;            // W_{m+1}
  BigInt finish(const State& w, Element x) const;         // sum_g W(g) |x^-1 C_G(g) ∩ H|
  BigInt identity_weight(const State& w) const;           // W(1), for L = 1

  BigInt count(std::span<const Element> shifts) const;

 private:
  std::vector<Element> coset(Element x) const;

  const GroupTable& g_;
  SubgroupRef h_;
  std::uint32_t length_;
  bool wide_;
  BigInt total_;
};

}  // namespace nilprob::detail
