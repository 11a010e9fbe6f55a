#include "nilprob/detail/np_engine.hpp"

#include <algorithm>

#include <boost/multiprecision/cpp_int.hpp>

#include "nilprob/errors.hpp"
#include "nilprob/simd/kernels.hpp"

namespace nilprob::detail {
namespace {

const simd::KernelTable& kernels_for(const GroupTable& g) {
  return simd::gather_safe(g.order()) ? simd::kernels() : simd::scalar_kernels();
}

}  // namespace

NpEngine::NpEngine(const GroupTable& g, const SubgroupRef& h, std::uint32_t length, bool force_wide)
    : g_(g), h_(h), length_(length) {
  if (length == 0) throw DefinitionError("shift tuple must be nonempty");
  if (h.parent_order() != g.order()) throw DefinitionError("subgroup does not belong to the group");
  total_ = boost::multiprecision::pow(BigInt(h.size()), length);
  wide_ = force_wide || total_ > BigInt(UINT64_MAX);
}

std::vector<Element> NpEngine::coset(Element x) const {
  if (x >= g_.order()) throw DefinitionError("shift element out of range");
  std::vector<Element> out;
  out.reserve(h_.size());
  for (Element y : h_.elements()) out.push_back(g_.mul(x, y));
  return out;
}

NpEngine::State NpEngine::start(Element x) const {
  State s;
  s.support = coset(x);
  std::sort(s.support.begin(), s.support.end());
  if (wide_)
    s.wide.assign(g_.order(), BigInt(0));
  else
    s.narrow.assign(g_.order(), 0);
  for (Element e : s.support) {
    if (wide_)
      s.wide[e] = 1;
    else
      s.narrow[e] = 1;
  }
  return s;
}

NpEngine::State NpEngine::step(const State& w, Element x) const {
  const std::vector<Element> us = coset(x);
  const auto& k = kernels_for(g_);
  std::vector<Element> out(us.size());
  State next;
  std::vector<std::uint8_t> seen(g_.order(), 0);
  if (wide_)
    next.wide.assign(g_.order(), BigInt(0));
  else
    next.narrow.assign(g_.order(), 0);
  for (Element src : w.support) {
    k.commutator_batch(g_.table_data(), g_.inv_data(), g_.order(), src, us.data(), out.data(),
                       out.size());
    if (wide_) {
      const BigInt& weight = w.wide[src];
      for (Element t : out) {
        next.wide[t] += weight;
        seen[t] = 1;
      }
    } else {
      const std::uint64_t weight = w.narrow[src];
      for (Element t : out) {
        next.narrow[t] += weight;
        seen[t] = 1;
      }
    }
  }
  for (Element e = 0; e < g_.order(); ++e)
    if (seen[e]) next.support.push_back(e);
  return next;
}

BigInt NpEngine::finish(const State& w, Element x) const {
  const std::vector<Element> us = coset(x);
  const auto& k = kernels_for(g_);
  std::vector<std::uint32_t> hits(w.support.size());
  for (std::size_t i = 0; i < w.support.size(); ++i)
    hits[i] = static_cast<std::uint32_t>(
        k.count_commuting(g_.table_data(), g_.order(), w.support[i], us.data(), us.size()));
  if (wide_) {
    BigInt sum = 0;
    for (std::size_t i = 0; i < w.support.size(); ++i) sum += w.wide[w.support[i]] * hits[i];
    return sum;
  }
  std::vector<std::uint64_t> weights(w.support.size());
  for (std::size_t i = 0; i < w.support.size(); ++i) weights[i] = w.narrow[w.support[i]];
  return BigInt(k.dot_u64_u32(weights.data(), hits.data(), weights.size()));
}

BigInt NpEngine::identity_weight(const State& w) const {
  return wide_ ? w.wide[kIdentity] : BigInt(w.narrow[kIdentity]);
}

BigInt NpEngine::count(std::span<const Element> shifts) const {
  if (shifts.size() != length_) throw DefinitionError("shift tuple length mismatch");
  State s = start(shifts[0]);
  if (length_ == 1) return identity_weight(s);
  for (std::size_t i = 1; i + 1 < shifts.size(); ++i) s = step(s, shifts[i]);
  return finish(s, shifts.back());
}

}  // namespace nilprob::detail
