#include <cmath>
#include <map>
#include <sstream>

#include "nilprob/errors.hpp"
#include "nilprob/verify.hpp"

namespace nilprob {

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids{
      check_id::npleqcp,           check_id::center_recursion,    check_id::nocamn,
      check_id::gap_bound_derived, check_id::gap_bound_stated,    check_id::submultiplicativity,
      check_id::mtvv_monotonicity, check_id::series_bound_derived, check_id::series_bound_stated};
  return ids;
}

bool is_must_hold(std::string_view check) {
  return check != check_id::gap_bound_stated && check != check_id::series_bound_stated;
}

ExactProb stated_gap_constant(std::uint32_t k) {
  const BigInt den = BigInt(1) << (k + 1);
  return ExactProb(den - 3, den);
}

ExactProb derived_gap_constant(std::uint32_t k) {
  const BigInt den = BigInt(1) << (k + 2);
  return ExactProb(den - 3, den);
}

nlohmann::json to_json(const CheckOutcome& o) {
  nlohmann::json j{{"check", o.check},   {"group", o.group},         {"k", o.k},
                   {"params", o.params}, {"lhs", o.lhs},             {"rhs", o.rhs},
                   {"relation", o.relation}, {"holds", o.holds},     {"must_hold", o.must_hold},
                   {"sharp", o.sharp},   {"cases", o.cases},         {"violations", o.violations}};
  if (o.skipped) {
    j["skipped"] = true;
    j["skip_reason"] = o.skip_reason;
  }
  if (o.sharp_cases) j["sharp_cases"] = o.sharp_cases;
  if (!o.witness.is_null()) j["witness"] = o.witness;
  return j;
}

namespace {

nlohmann::json shifts_json(std::span<const Element> s) { return nlohmann::json(std::vector<Element>(s.begin(), s.end())); }

CheckOutcome base_outcome(std::string check, const GroupTable& g, std::uint32_t k) {
  CheckOutcome o;
  o.must_hold = is_must_hold(check);
  o.check = std::move(check);
  o.group = g.label();
  o.k = k;
  return o;
}

std::vector<CheckOutcome> per_tuple(const CheckOutcome& base,
                                    const std::function<void(const TupleVisitor&)>& run) {
  std::vector<CheckOutcome> out;
  run([&](std::span<const Element> s, const ExactProb& lhs, const ExactProb& rhs) {
    CheckOutcome o = base;
    o.lhs = lhs.to_string();
    o.rhs = rhs.to_string();
    o.holds = lhs <= rhs;
    o.violations = o.holds ? 0 : 1;
    o.sharp = lhs == rhs && !rhs.is_one();
    o.sharp_cases = o.sharp ? 1 : 0;
    o.witness = {{"shifts", shifts_json(s)}};
    out.push_back(std::move(o));
  });
  return out;
}

nlohmann::json subgroup_params(const SubgroupRef& h) { return {{"H_order", h.size()}}; }

bool class_at_most(const std::optional<std::uint32_t>& c, std::uint32_t k) { return c && *c <= k; }

std::string class_text(const std::optional<std::uint32_t>& c) {
  return c ? "class " + std::to_string(*c) : "not nilpotent";
}

nlohmann::json sup_witness(const SupResult& s) {
  nlohmann::json w{{"shifts", s.witness}};
  if (s.readings_differ()) {
    w["first_k_value"] = s.first_k_value.to_string();
    w["first_k_shifts"] = s.first_k_witness;
  }
  return w;
}

}  // namespace

void visit_npleqcp(const GroupTable& g, const SubgroupRef& h, const Budgets& budgets,
                   const TupleVisitor& visit) {
  const ExactProb bound = cp(g, h);
  const BigInt total = total_tuples(h, 2);
  enumerate_shift_tuples(g, h, 2, budgets, [&](std::span<const Element> s, const BigInt& count) {
    visit(s, ExactProb(count, total), bound);
  });
}

std::vector<CheckOutcome> check_npleqcp(const GroupTable& g, const SubgroupRef& h,
                                        const Budgets& budgets) {
  CheckOutcome base = base_outcome(check_id::npleqcp, g, 1);
  base.params = subgroup_params(h);
  return per_tuple(base, [&](const TupleVisitor& v) { visit_npleqcp(g, h, budgets, v); });
}

void visit_2_4n(const GroupTable& g, const SubgroupRef& h, std::uint32_t k, const Budgets& budgets,
                const TupleVisitor& visit) {
  if (k < 1) throw DefinitionError("k must be at least 1");
  const SubgroupRef z = center(g);
  std::vector<Element> kept;
  for (Element e : h.elements())
    if (z.contains(e)) kept.push_back(e);
  const QuotientMap q = quotient(g, SubgroupRef::from_closed_set(g.order(), std::move(kept)));
  const SubgroupRef hbar = image(q, h);
  const BigInt total = total_tuples(h, k + 1);
  std::map<ShiftTuple, ExactProb> rhs_cache;
  ShiftTuple projected(k);
  enumerate_shift_tuples(g, h, k + 1, budgets, [&](std::span<const Element> s, const BigInt& count) {
    for (std::uint32_t i = 0; i < k; ++i) projected[i] = q.project[s[i]];
    auto it = rhs_cache.find(projected);
    if (it == rhs_cache.end())
      it = rhs_cache.emplace(projected, np_fast(q.target, hbar, projected, budgets).value.half_plus_half())
               .first;
    visit(s, ExactProb(count, total), it->second);
  });
}

std::vector<CheckOutcome> check_2_4n(const GroupTable& g, const SubgroupRef& h, std::uint32_t k,
                                     const Budgets& budgets) {
  CheckOutcome base = base_outcome(check_id::center_recursion, g, k);
  base.params = subgroup_params(h);
  return per_tuple(base, [&](const TupleVisitor& v) { visit_2_4n(g, h, k, budgets, v); });
}

void visit_mtvv(const GroupTable& g, const SubgroupRef& n, std::uint32_t k, const Budgets& budgets,
                const TupleVisitor& visit) {
  if (k < 1) throw DefinitionError("k must be at least 1");
  if (!is_normal(g, n)) throw NotNormal("monotonicity needs a normal subgroup");
  const ShiftTuple ones(k + 1, kIdentity);
  const ExactProb bound = np_fast(g, n, ones, budgets).value;
  const BigInt total = total_tuples(n, k + 1);
  enumerate_shift_tuples(g, n, k + 1, budgets, [&](std::span<const Element> s, const BigInt& count) {
    visit(s, ExactProb(count, total), bound);
  });
}

std::vector<CheckOutcome> check_mtvv_monotonicity(const GroupTable& g, const SubgroupRef& n,
                                                  std::uint32_t k, const Budgets& budgets) {
  CheckOutcome base = base_outcome(check_id::mtvv_monotonicity, g, k);
  base.params = {{"N_order", n.size()}};
  return per_tuple(base, [&](const TupleVisitor& v) { visit_mtvv(g, n, k, budgets, v); });
}

CheckOutcome check_nocamn(const SupResult& sup, const GroupTable& g, const SubgroupRef& h,
                          std::uint32_t k) {
  CheckOutcome o = base_outcome(check_id::nocamn, g, k);
  o.params = subgroup_params(h);
  const auto c = nilpotency_class(g, h);
  o.lhs = sup.value.to_string();
  o.rhs = class_text(c);
  o.relation = "sup == 1 iff class <= k";
  o.holds = sup.value.is_one() == class_at_most(c, k);
  o.violations = o.holds ? 0 : 1;
  o.witness = sup_witness(sup);
  return o;
}

CheckOutcome check_nocamn(const GroupTable& g, const SubgroupRef& h, std::uint32_t k,
                          const Budgets& budgets) {
  return check_nocamn(np_sup(g, h, k, budgets), g, h, k);
}

std::pair<CheckOutcome, CheckOutcome> check_gap_bound(const SupResult& sup, const GroupTable& g,
                                                      const SubgroupRef& h, std::uint32_t k) {
  const auto c = nilpotency_class(g, h);
  auto make = [&](const char* id, const ExactProb& bound) {
    CheckOutcome o = base_outcome(id, g, k);
    o.params = subgroup_params(h);
    o.rhs = bound.to_string();
    if (class_at_most(c, k)) {
      o.skipped = true;
      o.skip_reason = class_text(c) + " is at most k";
      o.cases = 0;
      return o;
    }
    o.lhs = sup.value.to_string();
    o.holds = sup.value <= bound;
    o.violations = o.holds ? 0 : 1;
    o.sharp = sup.value == bound;
    o.sharp_cases = o.sharp ? 1 : 0;
    o.witness = sup_witness(sup);
    return o;
  };
  return {make(check_id::gap_bound_derived, derived_gap_constant(k)),
          make(check_id::gap_bound_stated, stated_gap_constant(k))};
}

std::pair<CheckOutcome, CheckOutcome> check_gap_bound(const GroupTable& g, const SubgroupRef& h,
                                                      std::uint32_t k, const Budgets& budgets) {
  if (class_at_most(nilpotency_class(g, h), k)) return check_gap_bound(SupResult{}, g, h, k);
  return check_gap_bound(np_sup(g, h, k, budgets), g, h, k);
}

CheckOutcome check_submultiplicativity(const GroupTable& g, const SubgroupRef& n,
                                       const SubgroupRef& h, std::uint32_t k,
                                       const Budgets& budgets) {
  if (!n.is_subset_of(h)) throw DefinitionError("N must be contained in H");
  const QuotientMap q = quotient(g, n);
  const SupResult lhs = np_sup(g, h, k, budgets);
  const SupResult top = np_sup(q.target, image(q, h), k, budgets);
  const SupResult bottom = np_sup(g, n, k, budgets);
  const ExactProb rhs = top.value * bottom.value;
  CheckOutcome o = base_outcome(check_id::submultiplicativity, g, k);
  o.params = {{"N_order", n.size()}, {"H_order", h.size()}};
  o.lhs = lhs.value.to_string();
  o.rhs = rhs.to_string();
  o.holds = lhs.value <= rhs;
  o.violations = o.holds ? 0 : 1;
  o.sharp = lhs.value == rhs && !rhs.is_one();
  o.sharp_cases = o.sharp ? 1 : 0;
  o.witness = {{"quotient", top.value.to_string()}, {"kernel", bottom.value.to_string()}};
  return o;
}

SeriesResult max_bad_series_length(const GroupTable& g, std::uint32_t k, std::uint32_t cap) {
  if (k < 1) throw DefinitionError("k must be at least 1");
  const std::vector<SubgroupRef> normals = normal_subgroups(g, cap);
  const std::size_t m = normals.size();
  // gamma_{k+1} of each normal subgroup; a factor A/B has class <= k iff it lies in B
  std::vector<SubgroupRef> gamma(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto lcs = lower_central_series(g, normals[i]);
    gamma[i] = lcs[std::min<std::size_t>(k, lcs.size() - 1)];
  }
  // best[i]: most bad factors in a chain from normals[i] down to 1; -1 if none
  std::vector<int> best(m, -1), next(m, -1);
  best[0] = 0;  // trivial subgroup
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (best[j] < 0 || normals[j].size() >= normals[i].size()) continue;
      if (!normals[j].is_subset_of(normals[i])) continue;
      if (gamma[i].is_subset_of(normals[j])) continue;
      if (best[j] + 1 > best[i]) {
        best[i] = best[j] + 1;
        next[i] = static_cast<int>(j);
      }
    }
  }
  SeriesResult r;
  const std::size_t top = m - 1;
  if (g.order() == 1 || best[top] <= 0) return r;
  r.r = best[top] - 1;
  for (int i = static_cast<int>(top); i >= 0; i = next[i]) {
    r.chain.push_back(normals[i]);
    if (i == 0) break;
  }
  return r;
}

std::pair<CheckOutcome, CheckOutcome> check_series_bound(const GroupTable& g, std::uint32_t k,
                                                         const Budgets& budgets) {
  auto make = [&](const char* id) { return base_outcome(id, g, k); };
  std::pair<CheckOutcome, CheckOutcome> out{make(check_id::series_bound_derived),
                                            make(check_id::series_bound_stated)};
  if (g.order() == 1) {
    for (auto* o : {&out.first, &out.second}) {
      o->skipped = true;
      o->skip_reason = "trivial group";
      o->cases = 0;
    }
    return out;
  }
  const SeriesResult series = max_bad_series_length(g, k);
  const ExactProb np = np_k(g, k, budgets).value;
  nlohmann::json chain = nlohmann::json::array();
  for (const auto& s : series.chain) chain.push_back(s.size());

  auto fill = [&](CheckOutcome& o, const ExactProb& c) {
    o.relation = "<";
    o.lhs = std::to_string(series.r);
    double bound = std::log(np.to_double()) / std::log(c.to_double());
    if (bound == 0) bound = 0;  // drop the sign of -0
    std::ostringstream rhs;
    rhs.precision(12);
    rhs << bound;
    o.rhs = rhs.str();
    // r < ln(np)/ln(c) with ln(c) < 0 is c^r > np for r >= 0
    o.holds = series.r < 0 || c.pow(static_cast<unsigned>(series.r)) > np;
    o.violations = o.holds ? 0 : 1;
    o.params = {{"factors", series.factors()}, {"np_k", np.to_string()}, {"constant", c.to_string()}};
    o.witness = {{"chain_orders", chain}};
  };
  fill(out.first, derived_gap_constant(k));
  fill(out.second, stated_gap_constant(k));
  return out;
}

}  // namespace nilprob
