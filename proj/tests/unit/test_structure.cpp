#include <doctest.h>

#include <algorithm>
#include <set>

#include "nilprob/catalog.hpp"
#include "nilprob/errors.hpp"
#include "nilprob/structure.hpp"

using namespace nilprob;

namespace {

struct Named {
  GroupTable table;
  std::vector<Permutation> perms;

  Element find(const Permutation& p) const {
    auto it = std::find(perms.begin(), perms.end(), p);
    REQUIRE(it != perms.end());
    return static_cast<Element>(it - perms.begin());
  }
  Element find(std::uint32_t degree, std::initializer_list<std::vector<std::uint32_t>> cycles) const {
    return find(Permutation::from_cycles(degree, cycles));
  }
};

Named named(const std::string& name) {
  return {catalog_get(name), enumerate_perm_group(catalog_generators(name).gens)};
}

std::vector<std::string> small_corpus() {
  std::vector<std::string> out;
  for (const auto& n : default_corpus_names())
    if (catalog_get(n).order() <= 24) out.push_back(n);
  return out;
}

// All unions of conjugacy classes that are subgroups, by brute force over
// subsets of classes. Only for groups with few classes.
std::vector<std::vector<Element>> normal_by_class_unions(const GroupTable& g) {
  const ClassData cd = conjugacy_classes(g);
  std::vector<std::vector<Element>> members(cd.count());
  for (Element x = 0; x < g.order(); ++x) members[cd.class_of[x]].push_back(x);
  std::vector<std::vector<Element>> out;
  const std::uint32_t rest = cd.count() - 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest); ++mask) {
    std::vector<std::uint8_t> in(g.order(), 0);
    std::vector<Element> set = members[0];
    for (std::uint32_t c = 0; c < rest; ++c)
      if (mask >> c & 1) set.insert(set.end(), members[c + 1].begin(), members[c + 1].end());
    for (Element x : set) in[x] = 1;
    bool closed = true;
    for (Element a : set) {
      for (Element b : set)
        if (!in[g.mul(a, b)]) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (!closed) continue;
    std::sort(set.begin(), set.end());
    out.push_back(set);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace

TEST_CASE("commutators in S3") {
  const Named s3 = named("S(3)");
  const GroupTable& g = s3.table;
  const Element r = s3.find(3, {{0, 1, 2}});
  const Element t = s3.find(3, {{0, 1}});
  for (Element a = 0; a < 6; ++a) CHECK(commutator(g, a, a) == kIdentity);
  CHECK(commutator(g, r, g.mul(r, r)) == kIdentity);

  const Element c = commutator(g, r, t);
  CHECK(s3.perms[c].is_identity() == false);
  CHECK(element_order(g, c) == 3);
  CHECK(c == g.mul(g.mul(g.inv(r), g.inv(t)), g.mul(r, t)));

  const std::vector<Element> one{t};
  CHECK(left_normed_commutator(g, one) == t);
  const std::vector<Element> three{r, t, t};
  const Element z = left_normed_commutator(g, three);
  CHECK(z != kIdentity);
  CHECK(element_order(g, z) == 3);
  CHECK(z == commutator(g, commutator(g, r, t), t));
  for (Element x = 0; x < 6; ++x) {
    const std::vector<Element> lead_id{kIdentity, x, t};
    CHECK(left_normed_commutator(g, lead_id) == kIdentity);
    const std::vector<Element> second_id{x, kIdentity, r};
    CHECK(left_normed_commutator(g, second_id) == kIdentity);
  }
  CHECK_THROWS_AS(left_normed_commutator(g, std::span<const Element>{}), EmptyInput);
}

TEST_CASE("centralizers and centers") {
  const Named s3 = named("S(3)");
  CHECK(centralizer(s3.table, kIdentity).is_whole());
  CHECK(centralizer(s3.table, s3.find(3, {{0, 1}})).size() == 2);
  CHECK(centralizer(s3.table, s3.find(3, {{0, 1, 2}})).size() == 3);
  CHECK(center(s3.table).is_trivial());

  const GroupTable q8 = catalog_get("Q8");
  for (Element x = 0; x < 8; ++x) {
    const auto o = element_order(q8, x);
    CHECK(centralizer(q8, x).size() == (o == 4 ? 4u : 8u));
  }
  CHECK(center(q8).size() == 2);
  CHECK(center(catalog_get("C(6)")).is_whole());
  CHECK(center(catalog_get("D(8)")).size() == 2);
  CHECK(center(catalog_get("S(4)")).is_trivial());
  CHECK(center(catalog_get("Heis(3)")).size() == 3);

  for (const auto& name : small_corpus()) {
    const GroupTable g = catalog_get(name);
    for (Element x = 0; x < g.order(); ++x) {
      const SubgroupRef c = centralizer(g, x);
      CHECK(c.size() == centralizer_order(g, x));
      for (Element a = 0; a < g.order(); ++a)
        CHECK(c.contains(a) == (g.mul(a, x) == g.mul(x, a)));
    }
  }
}

TEST_CASE("conjugacy classes") {
  CHECK(conjugacy_classes(catalog_get("C(4)")).count() == 4);
  const ClassData s3 = conjugacy_classes(catalog_get("S(3)"));
  REQUIRE(s3.count() == 3);
  std::multiset<std::uint32_t> sizes(s3.sizes.begin(), s3.sizes.end());
  CHECK(sizes == std::multiset<std::uint32_t>{1, 2, 3});
  CHECK(conjugacy_classes(catalog_get("S(4)")).count() == 5);
  CHECK(conjugacy_classes(catalog_get("Q8")).count() == 5);
  CHECK(conjugacy_classes(catalog_get("A(5)")).count() == 5);

  for (const auto& name : default_corpus_names()) {
    CAPTURE(name);
    const GroupTable g = catalog_get(name);
    const ClassData cd = conjugacy_classes(g);
    CHECK(cd.class_of[kIdentity] == 0);
    CHECK(cd.sizes[0] == 1);
    std::uint64_t total = 0;
    for (std::uint32_t c = 0; c < cd.count(); ++c) {
      total += cd.sizes[c];
      CHECK(cd.sizes[c] * cd.centralizer_order[c] == g.order());
      CHECK(cd.class_of[cd.reps[c]] == c);
    }
    CHECK(total == g.order());
    // x ~ y iff some conjugate maps one to the other; spot check via rows
    for (Element x = 0; x < g.order(); x += 7)
      for (Element a = 0; a < g.order(); a += 3)
        CHECK(cd.class_of[g.mul(g.mul(g.inv(a), x), a)] == cd.class_of[x]);
  }
}

TEST_CASE("subgroup closure and joins") {
  const Named s3 = named("S(3)");
  const GroupTable& g = s3.table;
  CHECK(subgroup_closure(g, {}).is_trivial());
  const std::vector<Element> r{s3.find(3, {{0, 1, 2}})};
  CHECK(subgroup_closure(g, r).size() == 3);
  const std::vector<Element> ts{s3.find(3, {{0, 1}}), s3.find(3, {{1, 2}})};
  CHECK(subgroup_closure(g, ts).is_whole());

  const SubgroupRef a = subgroup_closure(g, std::vector<Element>{ts[0]});
  const SubgroupRef b = subgroup_closure(g, std::vector<Element>{ts[1]});
  CHECK(join(g, a, b).is_whole());
  CHECK(a.is_subset_of(join(g, a, b)));
  CHECK_FALSE(is_normal(g, a));
  CHECK(is_normal(g, subgroup_closure(g, r)));

  CHECK_THROWS_AS(SubgroupRef::from_elements(g, {0, ts[0], ts[1]}), DefinitionError);
  CHECK_NOTHROW(SubgroupRef::from_elements(g, {ts[0], 0}));
}

TEST_CASE("normal subgroups") {
  CHECK(normal_subgroups(catalog_get("S(3)")).size() == 3);
  CHECK(normal_subgroups(catalog_get("Q8")).size() == 6);
  CHECK(normal_subgroups(catalog_get("C(7)")).size() == 2);
  CHECK(normal_subgroups(catalog_get("S(4)")).size() == 4);
  CHECK(normal_subgroups(catalog_get("A(5)")).size() == 2);
  CHECK(normal_subgroups(catalog_get("D(8)")).size() == 6);
  CHECK_THROWS_AS(normal_subgroups(catalog_get("S(4)"), 12), OrderExceeded);

  for (const auto& name : default_corpus_names()) {
    const GroupTable g = catalog_get(name);
    if (conjugacy_classes(g).count() > 16) continue;
    CAPTURE(name);
    const auto got = normal_subgroups(g);
    const auto want = normal_by_class_unions(g);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(std::vector<Element>(got[i].elements().begin(), got[i].elements().end()) == want[i]);
      CHECK(is_normal(g, got[i]));
    }
  }
}

TEST_CASE("quotients") {
  const GroupTable s3 = catalog_get("S(3)");
  const auto normals = normal_subgroups(s3);
  const QuotientMap by_all = quotient(s3, SubgroupRef::whole(s3));
  CHECK(by_all.target.order() == 1);
  const QuotientMap by_one = quotient(s3, SubgroupRef::trivial(s3));
  CHECK(by_one.target.same_table(s3));
  const QuotientMap by_a3 = quotient(s3, normals[1]);
  CHECK(by_a3.target.order() == 2);
  CHECK(by_a3.target.mul(1, 1) == 0);

  const Named n3 = named("S(3)");
  const SubgroupRef t = subgroup_closure(s3, std::vector<Element>{n3.find(3, {{0, 1}})});
  CHECK_THROWS_AS(quotient(s3, t), NotNormal);

  for (const auto& name : small_corpus()) {
    const GroupTable g = catalog_get(name);
    for (const auto& n : normal_subgroups(g)) {
      CAPTURE(name);
      const QuotientMap q = quotient(g, n);
      REQUIRE(q.target.order() * n.size() == g.order());
      CHECK(q.project[kIdentity] == 0);
      std::vector<std::uint32_t> fiber(q.target.order(), 0);
      for (Element a = 0; a < g.order(); ++a) {
        ++fiber[q.project[a]];
        CHECK((q.project[a] == 0) == n.contains(a));
        for (Element b = 0; b < g.order(); ++b)
          if (q.project[g.mul(a, b)] != q.target.mul(q.project[a], q.project[b])) {
            FAIL("projection is not a homomorphism");
          }
      }
      for (auto f : fiber) CHECK(f == n.size());
      for (std::size_t c = 1; c < q.coset_reps.size(); ++c) CHECK(q.coset_reps[c - 1] < q.coset_reps[c]);
      for (std::size_t c = 0; c < q.coset_reps.size(); ++c) CHECK(q.project[q.coset_reps[c]] == c);
    }
  }
}

TEST_CASE("lower central series and nilpotency class") {
  const auto orders = [](const std::vector<SubgroupRef>& s) {
    std::vector<std::uint32_t> out;
    for (const auto& x : s) out.push_back(x.size());
    return out;
  };
  CHECK(orders(lower_central_series(catalog_get("C(6)"))) == std::vector<std::uint32_t>{6, 1});
  CHECK(orders(lower_central_series(catalog_get("D(8)"))) == std::vector<std::uint32_t>{8, 2, 1});
  CHECK(orders(lower_central_series(catalog_get("S(3)"))) == std::vector<std::uint32_t>{6, 3, 3});
  CHECK(orders(lower_central_series(catalog_get("C(1)"))) == std::vector<std::uint32_t>{1});

  CHECK(nilpotency_class(catalog_get("C(1)")) == 0u);
  CHECK(nilpotency_class(catalog_get("C(5)")) == 1u);
  CHECK(nilpotency_class(catalog_get("Q8")) == 2u);
  CHECK(nilpotency_class(catalog_get("D(16)")) == 3u);
  CHECK_FALSE(nilpotency_class(catalog_get("S(3)")).has_value());
  CHECK_FALSE(nilpotency_class(catalog_get("A(4)")).has_value());

  const GroupTable s3 = catalog_get("S(3)");
  CHECK(nilpotency_class(s3, normal_subgroups(s3)[1]) == 1u);

  for (const auto& name : default_corpus_names()) {
    CAPTURE(name);
    const GroupTable g = catalog_get(name);
    const auto lcs = lower_central_series(g);
    CHECK(lcs.front().is_whole());
    for (std::size_t i = 0; i < lcs.size(); ++i) {
      CHECK(is_normal(g, lcs[i]));
      if (i > 0) CHECK(lcs[i].is_subset_of(lcs[i - 1]));
      // gamma_{i+1} contains every [a, b] with a in gamma_i
      if (i + 1 < lcs.size())
        for (Element a : lcs[i].elements())
          for (Element b = 0; b < g.order(); b += 5) CHECK(lcs[i + 1].contains(commutator(g, a, b)));
    }
    const auto c = nilpotency_class(g);
    CHECK(c.has_value() == lcs.back().is_trivial());
    if (c) CHECK(*c + 1 == lcs.size());
  }
}

TEST_CASE("coset intersections are empty or a coset of the centralizer") {
  const Named s3 = named("S(3)");
  const GroupTable& g = s3.table;
  const SubgroupRef a3 = normal_subgroups(g)[1];
  const Element r = s3.find(3, {{0, 1, 2}});
  const Element t = s3.find(3, {{0, 1}});
  CHECK(coset_intersection_size(g, a3, t, r) == 0);
  CHECK(coset_intersection_size(g, a3, kIdentity, r) == 3);

  for (const auto& name : small_corpus()) {
    const GroupTable gg = catalog_get(name);
    std::vector<SubgroupRef> subs = normal_subgroups(gg);
    for (auto& c : cyclic_subgroups(gg)) subs.push_back(c);
    for (const auto& h : subs) {
      for (Element x = 0; x < gg.order(); ++x) {
        std::uint64_t ch = 0;
        for (Element e : h.elements()) ch += gg.mul(e, x) == gg.mul(x, e);
        CHECK(coset_intersection_size(gg, h, kIdentity, x) == ch);
        for (Element y = 0; y < gg.order(); ++y) {
          const auto s = coset_intersection_size(gg, h, y, x);
          if (s != 0 && s != ch) FAIL("intersection size " << s << " not in {0, " << ch << "}");
        }
      }
    }
  }
}

TEST_CASE("coset representatives and subgroups as groups") {
  const GroupTable s4 = catalog_get("S(4)");
  const auto normals = normal_subgroups(s4);
  for (const auto& n : normals) {
    const auto reps = coset_representatives(s4, n);
    CHECK(reps.size() * n.size() == s4.order());
    CHECK(reps.front() == kIdentity);
    CHECK(std::is_sorted(reps.begin(), reps.end()));
    const GroupTable sub = subgroup_as_group(s4, n);
    CHECK(sub.order() == n.size());
    for (Element i = 0; i < sub.order(); ++i)
      for (Element j = 0; j < sub.order(); ++j)
        CHECK(n.elements()[sub.mul(i, j)] == s4.mul(n.elements()[i], n.elements()[j]));
  }
  const auto cyc = cyclic_subgroups(s4);
  // cyclic subgroups of S4: 1, 9 of order 2, 4 of order 3, 3 of order 4
  CHECK(cyc.size() == 17);
  CHECK(std::is_sorted(cyc.begin(), cyc.end()));
}
