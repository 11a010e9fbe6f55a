#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nilprob/group_table.hpp"
#include "nilprob/permutation.hpp"

namespace nilprob {

/// Permutation generators of a catalog group, all of one degree.
struct PermGenerators {
  std::uint32_t degree = 1;
  std::vector<Permutation> gens;
};

// Catalog names (spaces ignored; factors joined by 'x', '*' or U+00D7):
//
//   C(n)      cyclic, n >= 1: (0 1 ... n-1) on n points
//   D(2n)     dihedral of order 2n: i -> i+1 and i -> -i on Z/n for n >= 3;
//             D(2) = <(0 1)>, D(4) = <(0 1)(2 3), (0 2)(1 3)>
//   Dic(n)    dicyclic of order 4n, n >= 2: left-regular action on the 4n
//             elements a^i x^j (point i + 2n*j), a^2n = 1, x^2 = a^n,
//             x^-1 a x = a^-1; generators a and x
//   Q8        Dic(2)
//   S(n)      symmetric, 1 <= n <= 8: (0 1) and (0 1 ... n-1)
//   A(n)      alternating, 1 <= n <= 8: (0 1 i) for 2 <= i < n
//   Heis(p)   p in {2,3,5}: maps (u,v) -> (u+1, v) and (u,v) -> (u, v+u) on
//             F_p^2, point u + p*v
//   SL(2,3)   [[1,1],[0,1]] and [[1,0],[1,1]] acting on row vectors of
//             F_3^2 \ {0}, points ordered by 3*a + b - 1 for vector (a, b)
//
// Element ordering inside a table is the lexicographic order of image
// arrays; products use direct_product indexing.

/// Throws UnknownCatalogName or OrderExceeded.
GroupTable catalog_get(std::string_view name, std::uint32_t max_order = kDefaultOrderCap);

/// Generators of the named group; products become disjoint unions of the
/// factor actions. Throws UnknownCatalogName.
PermGenerators catalog_generators(std::string_view name);

/// Canonical spelling of a catalog expression, e.g. "s(3) x c(2)" -> "S(3)xC(2)".
std::string canonical_catalog_name(std::string_view name);

struct CatalogFamily {
  std::string pattern;
  std::string description;
  std::vector<std::string> examples;
};
std::vector<CatalogFamily> catalog_families();

/// Groups of order <= 64 verified by default.
std::vector<std::string> default_corpus_names();

}  // namespace nilprob
