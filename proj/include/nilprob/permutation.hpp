#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nilprob {

/// A bijection on {0, ..., degree-1} stored as its image array.
///
/// Products follow the "apply left, then right" convention:
/// compose(p, q)[i] == q[p[i]]. Group tables built from permutations use the
/// same convention, so a*b in a table is compose(a, b).
class Permutation {
 public:
  Permutation() = default;

  /// Throws DefinitionError unless `image` is a bijection.
  explicit Permutation(std::vector<std::uint32_t> image);

  static Permutation identity(std::uint32_t degree);

  /// Product of disjoint or overlapping cycles, applied left to right.
  static Permutation from_cycles(std::uint32_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::uint32_t degree() const noexcept {
    return static_cast<std::uint32_t>(image_.size());
  }
  std::uint32_t operator[](std::uint32_t point) const { return image_[point]; }
  std::span<const std::uint32_t> images() const noexcept { return image_; }
  const std::uint32_t* data() const noexcept { return image_.data(); }

  bool is_identity() const noexcept;
  std::optional<std::uint32_t> first_moved_point() const noexcept;

  std::string to_string() const;  // cycle notation, "()" for the identity

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<std::uint32_t> image, Unchecked) : image_(std::move(image)) {}

  std::vector<std::uint32_t> image_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
};

/// Apply p, then q. Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

/// [a, b] = a^-1 b^-1 a b under the compose() convention.
Permutation commutator(const Permutation& a, const Permutation& b);

/// Left-normed [[x1, x2], ..., xn]; throws EmptyInput on an empty list.
Permutation left_normed_commutator(std::span<const Permutation> xs);

}  // namespace nilprob
