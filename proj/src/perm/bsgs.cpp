#include "nilprob/bsgs.hpp"

#include <algorithm>
#include <set>

#include "nilprob/errors.hpp"

namespace nilprob {

void PermGroupBSGS::rebuild_orbit(std::size_t level) {
  Level& lv = levels_[level];
  lv.orbit.assign(1, lv.base_point);
  lv.transversal.assign(1, Permutation::identity(degree_));
  lv.transversal_inv.assign(1, Permutation::identity(degree_));
  lv.slot.assign(degree_, -1);
  lv.slot[lv.base_point] = 0;
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    const std::uint32_t point = lv.orbit[head];
    for (const Permutation& s : lv.generators) {
      const std::uint32_t image = s[point];
      if (lv.slot[image] >= 0) continue;
      lv.slot[image] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(image);
      Permutation u = compose(lv.transversal[head], s);
      lv.transversal_inv.push_back(inverse(u));
      lv.transversal.push_back(std::move(u));
    }
  }
}

PermGroupBSGS::Sifted PermGroupBSGS::sift(Permutation g, std::size_t from_level) const {
  for (std::size_t i = from_level; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    const std::int32_t j = lv.slot[g[lv.base_point]];
    if (j < 0) return {std::move(g), i};
    g = compose(g, lv.transversal_inv[static_cast<std::size_t>(j)]);
  }
  return {std::move(g), levels_.size()};
}

PermGroupBSGS PermGroupBSGS::schreier_sims(std::vector<Permutation> gens) {
  if (gens.empty()) throw EmptyInput("schreier_sims needs at least one generator");
  PermGroupBSGS g;
  g.degree_ = gens.front().degree();
  for (const auto& p : gens)
    if (p.degree() != g.degree_) throw DegreeMismatch(g.degree_, p.degree());
  g.gens_ = gens;

  std::vector<Permutation> nontrivial;
  for (auto& p : gens)
    if (!p.is_identity()) nontrivial.push_back(p);
  if (nontrivial.empty()) return g;

  std::uint32_t first = g.degree_;
  for (const auto& p : nontrivial) first = std::min(first, *p.first_moved_point());
  g.levels_.push_back(Level{first, nontrivial, {}, {}, {}, {}});
  g.rebuild_orbit(0);

  // Work from the deepest level up; whenever a Schreier generator fails to
  // sift, push its residue down and restart at the level where it stopped.
  std::size_t i = 0;
  for (;;) {
    bool complete = true;
    const Level& lv = g.levels_[i];
    for (std::size_t a = 0; a < lv.orbit.size() && complete; ++a) {
      for (std::size_t s = 0; s < lv.generators.size(); ++s) {
        const Permutation& gen = lv.generators[s];
        const std::uint32_t image = gen[lv.orbit[a]];
        const auto b = static_cast<std::size_t>(lv.slot[image]);
        Permutation schreier =
            compose(compose(lv.transversal[a], gen), lv.transversal_inv[b]);
        if (schreier.is_identity()) continue;
        Sifted r = g.sift(std::move(schreier), i + 1);
        if (r.residue.is_identity()) continue;
        if (r.depth == g.levels_.size()) {
          g.levels_.push_back(Level{*r.residue.first_moved_point(), {}, {}, {}, {}, {}});
        }
        for (std::size_t l = i + 1; l <= r.depth; ++l) {
          g.levels_[l].generators.push_back(r.residue);
          g.rebuild_orbit(l);
        }
        i = r.depth;
        complete = false;
        break;
      }
    }
    if (!complete) continue;
    if (i == 0) break;
    --i;
  }

  g.order_ = 1;
  for (const auto& level : g.levels_) g.order_ *= level.orbit.size();
  return g;
}

std::vector<std::uint32_t> PermGroupBSGS::base() const {
  std::vector<std::uint32_t> out;
  for (const auto& lv : levels_) out.push_back(lv.base_point);
  return out;
}

std::vector<Permutation> PermGroupBSGS::strong_generators() const {
  std::set<Permutation> all;
  for (const auto& lv : levels_) all.insert(lv.generators.begin(), lv.generators.end());
  return {all.begin(), all.end()};
}

bool PermGroupBSGS::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw DegreeMismatch(degree_, p.degree());
  Sifted r = sift(p, 0);
  return r.depth == levels_.size() && r.residue.is_identity();
}

Permutation PermGroupBSGS::random_uniform(Rng& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::uniform_int_distribution<std::size_t> pick(0, it->orbit.size() - 1);
    g = compose(g, it->transversal[pick(rng)]);
  }
  return g;
}

}  // namespace nilprob
