#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilprob/group_table.hpp"

namespace nilprob {

/// A subgroup of a GroupTable as a strictly sorted element list plus a
/// membership map. Constructors that take arbitrary element sets check
/// closure; results of the structural operations are closed by construction.
class SubgroupRef {
 public:
  SubgroupRef() = default;

  static SubgroupRef whole(const GroupTable& g);
  static SubgroupRef trivial(const GroupTable& g);

  /// Throws DefinitionError unless `elements` is a subgroup of g.
  static SubgroupRef from_elements(const GroupTable& g, std::vector<Element> elements);

  /// For results already known to be closed; sorts and dedups.
  static SubgroupRef from_closed_set(std::uint32_t parent_order, std::vector<Element> elements);

  std::uint32_t parent_order() const noexcept { return parent_order_; }
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(elements_.size()); }
  std::span<const Element> elements() const noexcept { return elements_; }
  bool contains(Element x) const noexcept { return x < member_.size() && member_[x]; }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == parent_order_; }
  bool is_subset_of(const SubgroupRef& other) const noexcept;

  friend bool operator==(const SubgroupRef& a, const SubgroupRef& b) noexcept {
    return a.parent_order_ == b.parent_order_ && a.elements_ == b.elements_;
  }
  /// Order first, then lexicographic element lists.
  friend bool operator<(const SubgroupRef& a, const SubgroupRef& b) noexcept;

 private:
  std::uint32_t parent_order_ = 0;
  std::vector<Element> elements_;
  std::vector<std::uint8_t> member_;
};

struct ClassData {
  std::vector<std::uint32_t> class_of;           // element -> class id
  std::vector<Element> reps;                     // least element of each class
  std::vector<std::uint32_t> sizes;
  std::vector<std::uint32_t> centralizer_order;  // |C_G(rep)|

  std::uint32_t count() const noexcept { return static_cast<std::uint32_t>(reps.size()); }
};

/// G -> G/N. Cosets are numbered by their least element, identity coset first.
struct QuotientMap {
  std::uint32_t source_order = 0;
  SubgroupRef kernel;
  GroupTable target;
  std::vector<Element> project;     // element of G -> coset index
  std::vector<Element> coset_reps;  // coset index -> least element
};

inline constexpr std::uint32_t kDefaultNormalSubgroupCap = 512;

/// a^-1 b^-1 a b
Element commutator(const GroupTable& g, Element a, Element b);

/// [[x1, x2], ..., xn]; a single element is returned unchanged. Throws EmptyInput.
Element left_normed_commutator(const GroupTable& g, std::span<const Element> xs);

SubgroupRef centralizer(const GroupTable& g, Element x);
std::uint64_t centralizer_order(const GroupTable& g, Element x);
SubgroupRef center(const GroupTable& g);

ClassData conjugacy_classes(const GroupTable& g);

/// Smallest subgroup containing the seeds.
SubgroupRef subgroup_closure(const GroupTable& g, std::span<const Element> seeds);
SubgroupRef join(const GroupTable& g, const SubgroupRef& a, const SubgroupRef& b);

bool is_normal(const GroupTable& g, const SubgroupRef& h);

/// All normal subgroups sorted by order then elements. Each is a join of
/// normal closures of single conjugacy classes. Throws OrderExceeded above cap.
std::vector<SubgroupRef> normal_subgroups(const GroupTable& g,
                                          std::uint32_t cap = kDefaultNormalSubgroupCap);

/// <x> for each element, deduplicated and sorted like normal_subgroups.
std::vector<SubgroupRef> cyclic_subgroups(const GroupTable& g);

/// Throws NotNormal.
QuotientMap quotient(const GroupTable& g, const SubgroupRef& n);

/// Image of h (a subgroup of the quotient's source) in the target.
SubgroupRef image(const QuotientMap& q, const SubgroupRef& h);

/// gamma_1 = H, gamma_{i+1} = <[a, b] : a in gamma_i, b in H>. Stops after
/// reaching the trivial subgroup, or after the first repeated term.
std::vector<SubgroupRef> lower_central_series(const GroupTable& g);
std::vector<SubgroupRef> lower_central_series(const GroupTable& g, const SubgroupRef& h);

/// Smallest c with gamma_{c+1} = 1; nullopt when H is not nilpotent.
std::optional<std::uint32_t> nilpotency_class(const GroupTable& g);
std::optional<std::uint32_t> nilpotency_class(const GroupTable& g, const SubgroupRef& h);

/// |y C_G(x) ∩ H|, which is always 0 or |C_H(x)|.
std::uint64_t coset_intersection_size(const GroupTable& g, const SubgroupRef& h, Element y,
                                      Element x);

/// Least element of each left coset xH, ascending.
std::vector<Element> coset_representatives(const GroupTable& g, const SubgroupRef& h);

/// H as a standalone group; element i is h.elements()[i].
GroupTable subgroup_as_group(const GroupTable& g, const SubgroupRef& h, std::string label = {});

}  // namespace nilprob
