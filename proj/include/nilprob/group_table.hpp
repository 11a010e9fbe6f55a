#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nilprob/permutation.hpp"

namespace nilprob {

/// Index of an element inside its GroupTable. Index 0 is the identity.
using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

/// Largest group for which a Cayley table is built unless the caller raises it.
inline constexpr std::uint32_t kDefaultOrderCap = 4096;

struct BuildOptions {
  std::uint32_t max_order = kDefaultOrderCap;
  // Associativity is checked on all n^3 triples up to this order, and on
  // 10*n^2 random triples above it.
  std::uint32_t exhaustive_limit = 256;
  bool force_exhaustive = false;
  std::uint64_t spot_check_seed = 0x51ed'270b'0d11'a5e5ULL;
};

/// A finite group as a validated Cayley table. Immutable once built.
class GroupTable {
 public:
  /// Empty placeholder (order 0); only assignment from a built table is meaningful.
  GroupTable() = default;

  /// Validates the group laws and computes inverses. `mul` is row-major n*n.
  /// Throws NotAGroup or OrderExceeded.
  static GroupTable from_table(std::uint32_t n, std::vector<Element> mul, std::string label,
                               const BuildOptions& options = {});

  std::uint32_t order() const noexcept { return n_; }
  Element mul(Element a, Element b) const noexcept {
    return mul_[static_cast<std::size_t>(a) * n_ + b];
  }
  Element inv(Element a) const noexcept { return inv_[a]; }
  std::span<const Element> row(Element a) const noexcept {
    return {mul_.data() + static_cast<std::size_t>(a) * n_, n_};
  }
  const Element* table_data() const noexcept { return mul_.data(); }
  const Element* inv_data() const noexcept { return inv_.data(); }
  const std::string& label() const noexcept { return label_; }

  GroupTable with_label(std::string label) const;

  /// FNV-1a over the order and the table entries; labels do not contribute.
  std::uint64_t fingerprint() const noexcept;

  bool same_table(const GroupTable& other) const noexcept {
    return n_ == other.n_ && mul_ == other.mul_;
  }

 private:
  std::uint32_t n_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::string label_;
};

/// Same as GroupTable::from_table.
GroupTable build_from_table(std::uint32_t n, std::vector<Element> mul, std::string label,
                            const BuildOptions& options = {});

/// Enumerates <gens> and returns its Cayley table. Elements are ordered by
/// their image arrays (lexicographic), so the identity lands at index 0.
/// Throws OrderExceeded when the group order exceeds options.max_order.
GroupTable build_from_perm_gens(const std::vector<Permutation>& gens, std::string label,
                                const BuildOptions& options = {});

/// The elements of <gens> in table order; elements()[i] is table element i.
std::vector<Permutation> enumerate_perm_group(const std::vector<Permutation>& gens,
                                              std::uint32_t max_order = kDefaultOrderCap);

/// a x b with (g, h) at index g*|b| + h. Throws OrderExceeded.
GroupTable direct_product(const GroupTable& a, const GroupTable& b,
                          std::uint32_t max_order = kDefaultOrderCap);

std::uint32_t element_order(const GroupTable& g, Element x);

/// element order -> number of elements with that order
std::map<std::uint32_t, std::uint32_t> element_order_census(const GroupTable& g);

}  // namespace nilprob
