#include "nilprob/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nilprob/errors.hpp"
#include "nilprob/simd/kernels.hpp"

namespace nilprob {
namespace {

void require_parent(const GroupTable& g, const SubgroupRef& h) {
  if (h.parent_order() != g.order())
    throw DefinitionError("subgroup belongs to a group of order " +
                          std::to_string(h.parent_order()) + ", not " + std::to_string(g.order()));
}

// Closure of `members` (already a subgroup) extended by `gens`, by right
// multiplication until nothing new appears.
void close_under(const GroupTable& g, std::vector<Element>& members, std::vector<std::uint8_t>& in,
                 const std::vector<Element>& gens) {
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Element e = members[head];
    for (Element s : gens) {
      const Element p = g.mul(e, s);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
      }
    }
  }
}

}  // namespace

SubgroupRef SubgroupRef::from_closed_set(std::uint32_t parent_order, std::vector<Element> elements) {
  SubgroupRef h;
  h.parent_order_ = parent_order;
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  h.member_.assign(parent_order, 0);
  for (Element e : elements) h.member_[e] = 1;
  h.elements_ = std::move(elements);
  return h;
}

SubgroupRef SubgroupRef::whole(const GroupTable& g) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  return from_closed_set(g.order(), std::move(all));
}

SubgroupRef SubgroupRef::trivial(const GroupTable& g) { return from_closed_set(g.order(), {kIdentity}); }

SubgroupRef SubgroupRef::from_elements(const GroupTable& g, std::vector<Element> elements) {
  for (Element e : elements)
    if (e >= g.order()) throw DefinitionError("element index out of range");
  SubgroupRef h = from_closed_set(g.order(), std::move(elements));
  if (!h.contains(kIdentity)) throw DefinitionError("subgroup must contain the identity");
  for (Element a : h.elements_)
    for (Element b : h.elements_)
      if (!h.contains(g.mul(a, b))) throw DefinitionError("element set is not closed");
  return h;
}

bool SubgroupRef::is_subset_of(const SubgroupRef& other) const noexcept {
  if (parent_order_ != other.parent_order_) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](Element e) { return other.contains(e); });
}

bool operator<(const SubgroupRef& a, const SubgroupRef& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements_ < b.elements_;
}

Element commutator(const GroupTable& g, Element a, Element b) {
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

Element left_normed_commutator(const GroupTable& g, std::span<const Element> xs) {
  if (xs.empty()) throw EmptyInput("left-normed commutator of an empty list");
  Element acc = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) acc = commutator(g, acc, xs[i]);
  return acc;
}

SubgroupRef centralizer(const GroupTable& g, Element x) {
  std::vector<Element> out;
  for (Element a = 0; a < g.order(); ++a)
    if (g.mul(a, x) == g.mul(x, a)) out.push_back(a);
  return SubgroupRef::from_closed_set(g.order(), std::move(out));
}

std::uint64_t centralizer_order(const GroupTable& g, Element x) {
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  const auto& k = simd::gather_safe(g.order()) ? simd::kernels() : simd::scalar_kernels();
  return k.count_commuting(g.table_data(), g.order(), x, all.data(), all.size());
}

SubgroupRef center(const GroupTable& g) {
  std::vector<Element> out;
  for (Element x = 0; x < g.order(); ++x)
    if (centralizer_order(g, x) == g.order()) out.push_back(x);
  return SubgroupRef::from_closed_set(g.order(), std::move(out));
}

ClassData conjugacy_classes(const GroupTable& g) {
  const std::uint32_t n = g.order();
  ClassData data;
  data.class_of.assign(n, UINT32_MAX);
  for (Element x = 0; x < n; ++x) {
    if (data.class_of[x] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(data.reps.size());
    std::uint32_t size = 0;
    for (Element b = 0; b < n; ++b) {
      const Element c = g.mul(g.mul(g.inv(b), x), b);
      if (data.class_of[c] == UINT32_MAX) {
        data.class_of[c] = id;
        ++size;
      }
    }
    data.reps.push_back(x);
    data.sizes.push_back(size);
    data.centralizer_order.push_back(n / size);
  }
  return data;
}

SubgroupRef subgroup_closure(const GroupTable& g, std::span<const Element> seeds) {
  std::vector<Element> members{kIdentity};
  std::vector<std::uint8_t> in(g.order(), 0);
  in[kIdentity] = 1;
  std::vector<Element> gens;
  for (Element s : seeds) {
    if (s >= g.order()) throw DefinitionError("element index out of range");
    if (in[s]) continue;
    gens.push_back(s);
    // Elements already present stay closed under the old generators; rerun
    // from the start so the new generator reaches every member.
    close_under(g, members, in, gens);
  }
  return SubgroupRef::from_closed_set(g.order(), std::move(members));
}

SubgroupRef join(const GroupTable& g, const SubgroupRef& a, const SubgroupRef& b) {
  std::vector<Element> members(a.elements().begin(), a.elements().end());
  std::vector<std::uint8_t> in(g.order(), 0);
  for (Element e : members) in[e] = 1;
  std::vector<Element> gens;
  for (Element s : b.elements()) {
    if (in[s]) continue;
    if (gens.empty()) gens.assign(a.elements().begin(), a.elements().end());
    gens.push_back(s);
    close_under(g, members, in, gens);
  }
  return SubgroupRef::from_closed_set(g.order(), std::move(members));
}

bool is_normal(const GroupTable& g, const SubgroupRef& h) {
  require_parent(g, h);
  for (Element x = 0; x < g.order(); ++x)
    for (Element e : h.elements())
      if (!h.contains(g.mul(g.mul(g.inv(x), e), x))) return false;
  return true;
}

std::vector<SubgroupRef> normal_subgroups(const GroupTable& g, std::uint32_t cap) {
  if (g.order() > cap) throw OrderExceeded(g.order(), cap);
  const ClassData classes = conjugacy_classes(g);
  std::vector<std::vector<Element>> members(classes.count());
  for (Element x = 0; x < g.order(); ++x) members[classes.class_of[x]].push_back(x);

  std::set<SubgroupRef> found;
  std::vector<SubgroupRef> work;
  for (const auto& cls : members) {
    SubgroupRef n = subgroup_closure(g, cls);
    if (found.insert(n).second) work.push_back(std::move(n));
  }
  // Join every newly found subgroup with everything found so far.
  for (std::size_t i = 0; i < work.size(); ++i) {
    const std::vector<SubgroupRef> snapshot(found.begin(), found.end());
    for (const auto& other : snapshot) {
      if (work[i].is_subset_of(other) || other.is_subset_of(work[i])) continue;
      SubgroupRef j = join(g, work[i], other);
      if (found.insert(j).second) work.push_back(std::move(j));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<SubgroupRef> cyclic_subgroups(const GroupTable& g) {
  std::set<SubgroupRef> found;
  for (Element x = 0; x < g.order(); ++x) {
    const Element seed[] = {x};
    found.insert(subgroup_closure(g, seed));
  }
  return {found.begin(), found.end()};
}

QuotientMap quotient(const GroupTable& g, const SubgroupRef& n) {
  require_parent(g, n);
  if (!is_normal(g, n)) throw NotNormal("subgroup of order " + std::to_string(n.size()) + " is not normal");
  QuotientMap q;
  q.source_order = g.order();
  q.kernel = n;
  q.project.assign(g.order(), UINT32_MAX);
  for (Element x = 0; x < g.order(); ++x) {
    if (q.project[x] != UINT32_MAX) continue;
    const auto id = static_cast<Element>(q.coset_reps.size());
    for (Element e : n.elements()) q.project[g.mul(x, e)] = id;
    q.coset_reps.push_back(x);
  }
  const auto m = static_cast<std::uint32_t>(q.coset_reps.size());
  std::vector<Element> mul(static_cast<std::size_t>(m) * m);
  for (Element i = 0; i < m; ++i)
    for (Element j = 0; j < m; ++j)
      mul[static_cast<std::size_t>(i) * m + j] = q.project[g.mul(q.coset_reps[i], q.coset_reps[j])];
  BuildOptions options;
  options.max_order = std::max(m, kDefaultOrderCap);
  q.target = GroupTable::from_table(m, std::move(mul), g.label() + "/N" + std::to_string(n.size()), options);
  return q;
}

SubgroupRef image(const QuotientMap& q, const SubgroupRef& h) {
  if (h.parent_order() != q.source_order) throw DefinitionError("subgroup is not in the quotient's source");
  std::vector<Element> out;
  for (Element e : h.elements()) out.push_back(q.project[e]);
  return SubgroupRef::from_closed_set(q.target.order(), std::move(out));
}

std::vector<SubgroupRef> lower_central_series(const GroupTable& g, const SubgroupRef& h) {
  require_parent(g, h);
  std::vector<SubgroupRef> series{h};
  while (!series.back().is_trivial()) {
    const SubgroupRef& cur = series.back();
    std::vector<std::uint8_t> seen(g.order(), 0);
    std::vector<Element> comms;
    for (Element a : cur.elements())
      for (Element b : h.elements()) {
        const Element c = commutator(g, a, b);
        if (!seen[c]) {
          seen[c] = 1;
          comms.push_back(c);
        }
      }
    SubgroupRef next = subgroup_closure(g, comms);
    const bool stable = next == cur;
    series.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

std::vector<SubgroupRef> lower_central_series(const GroupTable& g) {
  return lower_central_series(g, SubgroupRef::whole(g));
}

std::optional<std::uint32_t> nilpotency_class(const GroupTable& g, const SubgroupRef& h) {
  const auto series = lower_central_series(g, h);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<std::uint32_t>(series.size() - 1);
}

std::optional<std::uint32_t> nilpotency_class(const GroupTable& g) {
  return nilpotency_class(g, SubgroupRef::whole(g));
}

std::uint64_t coset_intersection_size(const GroupTable& g, const SubgroupRef& h, Element y, Element x) {
  require_parent(g, h);
  const Element yi = g.inv(y);
  std::uint64_t count = 0;
  for (Element z : h.elements()) {
    const Element c = g.mul(yi, z);  // z in y C_G(x)  <=>  y^-1 z commutes with x
    count += g.mul(c, x) == g.mul(x, c);
  }
  return count;
}

std::vector<Element> coset_representatives(const GroupTable& g, const SubgroupRef& h) {
  require_parent(g, h);
  std::vector<std::uint8_t> covered(g.order(), 0);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (Element e : h.elements()) covered[g.mul(x, e)] = 1;
  }
  return reps;
}

GroupTable subgroup_as_group(const GroupTable& g, const SubgroupRef& h, std::string label) {
  require_parent(g, h);
  const std::uint32_t m = h.size();
  std::vector<Element> index(g.order(), 0);
  for (Element i = 0; i < m; ++i) index[h.elements()[i]] = i;
  std::vector<Element> mul(static_cast<std::size_t>(m) * m);
  for (Element i = 0; i < m; ++i)
    for (Element j = 0; j < m; ++j)
      mul[static_cast<std::size_t>(i) * m + j] = index[g.mul(h.elements()[i], h.elements()[j])];
  if (label.empty()) label = g.label() + "|H" + std::to_string(m);
  BuildOptions options;
  options.max_order = std::max(m, kDefaultOrderCap);
  return GroupTable::from_table(m, std::move(mul), std::move(label), options);
}

}  // namespace nilprob
