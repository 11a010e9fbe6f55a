#pragma once

#include <cstdint>
#include <vector>

#include "nilprob/bigint.hpp"
#include "nilprob/permutation.hpp"
#include "nilprob/rng.hpp"

namespace nilprob {

/// Stabilizer chain of a permutation group, built by deterministic
/// Schreier-Sims. Level i stabilizes base[0..i-1] and holds the orbit of
/// base[i] with one coset representative per orbit point (u maps base[i] to
/// the orbit point).
///
/// Base points are always the smallest point moved by the element that
/// forces a new level, so the chain depends only on the generator order.
class PermGroupBSGS {
 public:
  struct Level {
    std::uint32_t base_point = 0;
    std::vector<Permutation> generators;   // strong generators fixing earlier base points
    std::vector<std::uint32_t> orbit;      // BFS order from base_point
    std::vector<Permutation> transversal;  // transversal[j] maps base_point to orbit[j]
    std::vector<Permutation> transversal_inv;
    std::vector<std::int32_t> slot;        // point -> index into orbit, -1 if absent
  };

  /// Throws EmptyInput for no generators and DegreeMismatch for mixed degrees.
  static PermGroupBSGS schreier_sims(std::vector<Permutation> gens);

  std::uint32_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  std::vector<std::uint32_t> base() const;
  std::vector<Permutation> strong_generators() const;
  const std::vector<Level>& levels() const noexcept { return levels_; }
  const BigInt& order() const noexcept { return order_; }

  /// True iff p sifts to the identity. Throws DegreeMismatch.
  bool contains(const Permutation& p) const;

  /// Exactly uniform element: an independent uniform coset representative
  /// per level, multiplied bottom level first.
  Permutation random_uniform(Rng& rng) const;

 private:
  struct Sifted {
    Permutation residue;
    std::size_t depth;  // first level where sifting stopped; levels_.size() if none
  };
  Sifted sift(Permutation g, std::size_t from_level) const;
  void rebuild_orbit(std::size_t level);

  std::uint32_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

}  // namespace nilprob
