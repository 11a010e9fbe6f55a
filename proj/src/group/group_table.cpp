#include "nilprob/group_table.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "nilprob/bsgs.hpp"
#include "nilprob/errors.hpp"

namespace nilprob {
namespace {

void check_associativity(const GroupTable& g, const BuildOptions& options) {
  const std::uint32_t n = g.order();
  auto check = [&](Element a, Element b, Element c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
      throw NotAGroup("associativity", a, b, c);
  };
  if (options.force_exhaustive || n <= options.exhaustive_limit) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c) check(a, b, c);
    return;
  }
  std::mt19937_64 rng(options.spot_check_seed);
  std::uniform_int_distribution<Element> pick(0, n - 1);
  const std::uint64_t trials = 10ULL * n * n;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Element a = pick(rng), b = pick(rng), c = pick(rng);
    check(a, b, c);
  }
}

}  // namespace

GroupTable GroupTable::from_table(std::uint32_t n, std::vector<Element> mul, std::string label,
                                  const BuildOptions& options) {
  if (n == 0) throw DefinitionError("group order must be positive");
  if (n > options.max_order) throw OrderExceeded(n, options.max_order);
  if (mul.size() != static_cast<std::size_t>(n) * n)
    throw DefinitionError("multiplication table must have n*n entries");
  for (std::size_t i = 0; i < mul.size(); ++i)
    if (mul[i] >= n)
      throw NotAGroup("range", static_cast<Element>(i / n), static_cast<Element>(i % n), mul[i]);

  GroupTable g;
  g.n_ = n;
  g.mul_ = std::move(mul);
  g.label_ = std::move(label);

  for (Element a = 0; a < n; ++a) {
    if (g.mul(kIdentity, a) != a || g.mul(a, kIdentity) != a)
      throw NotAGroup("identity", kIdentity, a, a);
  }
  g.inv_.assign(n, n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (g.mul(a, b) == kIdentity) {
        g.inv_[a] = b;
        break;
      }
    }
    if (g.inv_[a] == n || g.mul(g.inv_[a], a) != kIdentity)
      throw NotAGroup("inverse", a, g.inv_[a] == n ? a : g.inv_[a], kIdentity);
  }
  check_associativity(g, options);
  return g;
}

GroupTable GroupTable::with_label(std::string label) const {
  GroupTable copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

std::uint64_t GroupTable::fingerprint() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  };
  feed(n_);
  for (Element e : mul_) feed(e);
  return h;
}

GroupTable build_from_table(std::uint32_t n, std::vector<Element> mul, std::string label,
                            const BuildOptions& options) {
  return GroupTable::from_table(n, std::move(mul), std::move(label), options);
}

std::vector<Permutation> enumerate_perm_group(const std::vector<Permutation>& gens,
                                              std::uint32_t max_order) {
  if (gens.empty()) throw EmptyInput("no generators");
  const PermGroupBSGS chain = PermGroupBSGS::schreier_sims(gens);
  if (chain.order() > max_order) {
    const std::uint64_t bound = chain.order() > BigInt(UINT64_MAX)
                                    ? UINT64_MAX
                                    : chain.order().convert_to<std::uint64_t>();
    throw OrderExceeded(bound, max_order);
  }
  // Breadth-first closure under right multiplication by generators.
  std::set<Permutation> seen{Permutation::identity(gens.front().degree())};
  std::vector<Permutation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier)
      for (const auto& s : gens) {
        Permutation q = compose(p, s);
        if (seen.insert(q).second) next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

GroupTable build_from_perm_gens(const std::vector<Permutation>& gens, std::string label,
                                const BuildOptions& options) {
  const std::vector<Permutation> elements = enumerate_perm_group(gens, options.max_order);
  const auto n = static_cast<std::uint32_t>(elements.size());
  std::vector<Element> mul(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Permutation ab = compose(elements[a], elements[b]);
      const auto it = std::lower_bound(elements.begin(), elements.end(), ab);
      mul[static_cast<std::size_t>(a) * n + b] = static_cast<Element>(it - elements.begin());
    }
  }
  return GroupTable::from_table(n, std::move(mul), std::move(label), options);
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b, std::uint32_t max_order) {
  const std::uint64_t order = static_cast<std::uint64_t>(a.order()) * b.order();
  if (order > max_order) throw OrderExceeded(order, max_order);
  const auto n = static_cast<std::uint32_t>(order);
  const std::uint32_t nb = b.order();
  std::vector<Element> mul(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      mul[static_cast<std::size_t>(x) * n + y] =
          a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
  BuildOptions options;
  options.max_order = max_order;
  return GroupTable::from_table(n, std::move(mul), a.label() + "x" + b.label(), options);
}

std::uint32_t element_order(const GroupTable& g, Element x) {
  std::uint32_t k = 1;
  for (Element p = x; p != kIdentity; p = g.mul(p, x)) ++k;
  return k;
}

std::map<std::uint32_t, std::uint32_t> element_order_census(const GroupTable& g) {
  std::map<std::uint32_t, std::uint32_t> census;
  for (Element x = 0; x < g.order(); ++x) ++census[element_order(g, x)];
  return census;
}

}  // namespace nilprob
