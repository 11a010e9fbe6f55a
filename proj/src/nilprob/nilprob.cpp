#include "nilprob/nilprob.hpp"

#include <cmath>

#include "nilprob/detail/np_engine.hpp"
#include "nilprob/errors.hpp"

namespace nilprob {
namespace {

void check_inputs(const GroupTable& g, const SubgroupRef& h, std::span<const Element> shifts) {
  if (shifts.empty()) throw DefinitionError("shift tuple must be nonempty");
  if (h.parent_order() != g.order()) throw DefinitionError("subgroup does not belong to the group");
  for (Element x : shifts)
    if (x >= g.order()) throw DefinitionError("shift element out of range");
}

void check_fast_budget(const GroupTable& g, const SubgroupRef& h, std::size_t length,
                       const Budgets& budgets) {
  if (g.order() > budgets.fast_order)
    throw BudgetExceeded("exact DP on a group of order " + std::to_string(g.order()), g.order(),
                         budgets.fast_order);
  const long double ops = static_cast<long double>(length) * g.order() * h.size();
  if (ops > budgets.fast_ops) throw BudgetExceeded("exact DP", ops, budgets.fast_ops);
}

}  // namespace

std::string to_string(Method m) { return m == Method::brute_force ? "brute_force" : "dp"; }

nlohmann::json to_json(const NpResult& r) {
  return {{"value", r.value.to_string()},
          {"method", to_string(r.method)},
          {"counted", r.counted.str()},
          {"total", r.total.str()}};
}

nlohmann::json to_json(const SupResult& r) {
  return {{"value", r.value.to_string()},
          {"witness", r.witness},
          {"first_k_value", r.first_k_value.to_string()},
          {"first_k_witness", r.first_k_witness},
          {"readings_differ", r.readings_differ()},
          {"tuples", r.tuples_evaluated}};
}

BigInt CommutatorDistribution::mass() const {
  BigInt sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

BigInt total_tuples(const SubgroupRef& h, std::uint32_t length) {
  return boost::multiprecision::pow(BigInt(h.size()), length);
}

NpResult np_bruteforce(const GroupTable& g, const SubgroupRef& h, std::span<const Element> shifts,
                       const Budgets& budgets) {
  check_inputs(g, h, shifts);
  const std::size_t length = shifts.size();
  const long double tuples = std::pow(static_cast<long double>(h.size()), static_cast<long double>(length));
  if (tuples > budgets.tuples) throw BudgetExceeded("brute-force enumeration", tuples, budgets.tuples);

  // prefix[d] = [x_1 y_1, ..., x_{d+1} y_{d+1}]
  std::vector<Element> prefix(length);
  std::uint64_t hits = 0;
  const auto elements = h.elements();
  auto descend = [&](auto&& self, std::size_t depth) -> void {
    for (Element y : elements) {
      const Element v = g.mul(shifts[depth], y);
      prefix[depth] = depth == 0 ? v : commutator(g, prefix[depth - 1], v);
      if (depth + 1 == length)
        hits += prefix[depth] == kIdentity;
      else
        self(self, depth + 1);
    }
  };
  descend(descend, 0);

  NpResult r;
  r.method = Method::brute_force;
  r.counted = hits;
  r.total = total_tuples(h, static_cast<std::uint32_t>(length));
  r.value = ExactProb(r.counted, r.total);
  return r;
}

NpResult np_fast(const GroupTable& g, const SubgroupRef& h, std::span<const Element> shifts,
                 const Budgets& budgets) {
  check_inputs(g, h, shifts);
  check_fast_budget(g, h, shifts.size(), budgets);
  const detail::NpEngine engine(g, h, static_cast<std::uint32_t>(shifts.size()));
  NpResult r;
  r.method = Method::dp;
  r.counted = engine.count(shifts);
  r.total = engine.total();
  r.value = ExactProb(r.counted, r.total);
  return r;
}

NpResult np_k(const GroupTable& g, std::uint32_t k, const Budgets& budgets) {
  if (k < 1) throw DefinitionError("k must be at least 1");
  const ShiftTuple shifts(k + 1, kIdentity);
  return np_fast(g, SubgroupRef::whole(g), shifts, budgets);
}

ExactProb cp(const GroupTable& g) { return ExactProb(conjugacy_classes(g).count(), g.order()); }

ExactProb cp(const GroupTable& g, const SubgroupRef& h) {
  if (h.is_whole()) return cp(g);
  return cp(subgroup_as_group(g, h));
}

CommutatorDistribution commutator_distribution(const GroupTable& g, const SubgroupRef& h,
                                               std::span<const Element> shifts,
                                               const Budgets& budgets) {
  check_inputs(g, h, shifts);
  check_fast_budget(g, h, shifts.size(), budgets);
  const detail::NpEngine engine(g, h, static_cast<std::uint32_t>(shifts.size()));
  auto state = engine.start(shifts[0]);
  for (std::size_t i = 1; i < shifts.size(); ++i) state = engine.step(state, shifts[i]);
  CommutatorDistribution d;
  d.stage = static_cast<std::uint32_t>(shifts.size());
  d.counts.assign(g.order(), BigInt(0));
  for (Element e : state.support)
    d.counts[e] = engine.wide() ? state.wide[e] : BigInt(state.narrow[e]);
  return d;
}

void enumerate_shift_tuples(
    const GroupTable& g, const SubgroupRef& h, std::uint32_t length, const Budgets& budgets,
    const std::function<void(std::span<const Element>, const BigInt&)>& visit) {
  if (length == 0) throw DefinitionError("shift tuple must be nonempty");
  if (h.parent_order() != g.order()) throw DefinitionError("subgroup does not belong to the group");
  const std::vector<Element> reps = coset_representatives(g, h);
  const long double tuples = std::pow(static_cast<long double>(reps.size()), static_cast<long double>(length));
  if (tuples > budgets.shifts) throw BudgetExceeded("shift-tuple enumeration", tuples, budgets.shifts);
  check_fast_budget(g, h, length, budgets);

  const detail::NpEngine engine(g, h, length);
  ShiftTuple shifts(length);
  // Depth-first over prefixes so each W_m is computed once per prefix.
  auto descend = [&](auto&& self, std::uint32_t depth, const detail::NpEngine::State* parent) -> void {
    for (Element x : reps) {
      shifts[depth] = x;
      if (depth + 1 == length) {
        const BigInt count = length == 1 ? engine.identity_weight(engine.start(x))
                                         : engine.finish(*parent, x);
        visit(shifts, count);
      } else {
        const auto state = depth == 0 ? engine.start(x) : engine.step(*parent, x);
        self(self, depth + 1, &state);
      }
    }
  };
  descend(descend, 0, nullptr);
}

SupResult np_sup(const GroupTable& g, const SubgroupRef& h, std::uint32_t k, const Budgets& budgets) {
  if (k < 1) throw DefinitionError("k must be at least 1");
  const std::uint32_t length = k + 1;
  SupResult r;
  BigInt best = -1, best_first_k = -1;
  enumerate_shift_tuples(g, h, length, budgets, [&](std::span<const Element> shifts, const BigInt& count) {
    ++r.tuples_evaluated;
    if (count > best) {
      best = count;
      r.witness.assign(shifts.begin(), shifts.end());
    }
    if (shifts.back() == kIdentity && count > best_first_k) {
      best_first_k = count;
      r.first_k_witness.assign(shifts.begin(), shifts.end());
    }
  });
  const BigInt total = total_tuples(h, length);
  r.value = ExactProb(best, total);
  r.first_k_value = ExactProb(best_first_k, total);
  return r;
}

}  // namespace nilprob
