#include <doctest.h>

#include <cmath>
#include <sstream>

#include "nilprob/catalog.hpp"
#include "nilprob/errors.hpp"
#include "nilprob/verify.hpp"

using namespace nilprob;

namespace {

ExactProb P(std::int64_t a, std::int64_t b) { return ExactProb(a, b); }

bool all_hold(const std::vector<CheckOutcome>& v) {
  for (const auto& o : v)
    if (!o.holds) return false;
  return true;
}

// Longest chain of normal subgroups with every factor of class > k, found by
// trying all chains and building each factor as a quotient group.
int bad_chain_oracle(const GroupTable& g, std::uint32_t k) {
  const auto normals = normal_subgroups(g);
  auto factor_is_bad = [&](const SubgroupRef& top, const SubgroupRef& bottom) {
    const GroupTable t = subgroup_as_group(g, top);
    std::vector<Element> inner;
    for (Element i = 0; i < t.order(); ++i)
      if (bottom.contains(top.elements()[i])) inner.push_back(i);
    const QuotientMap q = quotient(t, SubgroupRef::from_elements(t, inner));
    const auto c = nilpotency_class(q.target);
    return !c || *c > k;
  };
  auto longest = [&](auto&& self, std::size_t top) -> int {
    if (normals[top].is_trivial()) return 0;
    int best = -1;
    for (std::size_t j = 0; j < normals.size(); ++j) {
      if (normals[j].size() >= normals[top].size() || !normals[j].is_subset_of(normals[top])) continue;
      if (!factor_is_bad(normals[top], normals[j])) continue;
      const int rest = self(self, j);
      if (rest >= 0) best = std::max(best, rest + 1);
    }
    return best;
  };
  const int factors = g.order() == 1 ? 0 : longest(longest, normals.size() - 1);
  return factors <= 0 ? -1 : factors - 1;
}

}  // namespace

TEST_CASE("gap constants") {
  CHECK(derived_gap_constant(1) == P(5, 8));
  CHECK(derived_gap_constant(2) == P(13, 16));
  CHECK(stated_gap_constant(1) == P(1, 4));
  CHECK(stated_gap_constant(2) == P(5, 8));
  for (std::uint32_t k = 1; k <= 10; ++k) CHECK(derived_gap_constant(k) > stated_gap_constant(k));
  CHECK(is_must_hold(check_id::gap_bound_derived));
  CHECK_FALSE(is_must_hold(check_id::gap_bound_stated));
  CHECK_FALSE(is_must_hold(check_id::series_bound_stated));
  CHECK(all_check_ids().size() == 9);
}

TEST_CASE("pairs never beat the commuting probability") {
  const GroupTable c6 = catalog_get("C(6)");
  for (const auto& o : check_npleqcp(c6, normal_subgroups(c6)[1])) {
    CHECK(o.holds);
    CHECK(o.rhs == "1/1");
  }
  const GroupTable s3 = catalog_get("S(3)");
  const auto pairs = check_npleqcp(s3, normal_subgroups(s3)[1]);
  CHECK(pairs.size() == 4);
  CHECK(all_hold(pairs));
  const GroupTable s4 = catalog_get("S(4)");
  const auto normals = normal_subgroups(s4);
  const auto a4 = std::find_if(normals.begin(), normals.end(), [](const auto& n) { return n.size() == 12; });
  REQUIRE(a4 != normals.end());
  const auto a4_pairs = check_npleqcp(s4, *a4);
  CHECK(a4_pairs.size() == 4);
  CHECK(all_hold(a4_pairs));
  CHECK(a4_pairs.front().rhs == "1/3");
}

TEST_CASE("center-quotient recursion outcomes") {
  const GroupTable q8 = catalog_get("Q8");
  const auto central = check_2_4n(q8, center(q8), 2);
  CHECK(central.size() == 64);
  for (const auto& o : central) {
    CHECK(o.rhs == "1/1");
    CHECK(o.holds);
  }
  const auto q8_whole = check_2_4n(q8, SubgroupRef::whole(q8), 2);
  REQUIRE(q8_whole.size() == 1);
  CHECK(q8_whole[0].lhs == "1/1");
  CHECK(q8_whole[0].rhs == "1/1");

  const GroupTable s3 = catalog_get("S(3)");
  const auto s3_whole = check_2_4n(s3, SubgroupRef::whole(s3), 2);
  REQUIRE(s3_whole.size() == 1);
  CHECK(s3_whole[0].lhs == "3/4");
  CHECK(s3_whole[0].rhs == "3/4");
  CHECK(s3_whole[0].holds);
  CHECK(s3_whole[0].sharp);

  // proper subgroups can break the bound; the outcome says so
  const auto a3 = check_2_4n(s3, normal_subgroups(s3)[1], 1);
  CHECK(a3.front().lhs == "1/1");
  CHECK(a3.front().rhs == "2/3");
  CHECK_FALSE(a3.front().holds);
  CHECK(a3.front().is_violation());
}

TEST_CASE("sup equals one exactly for class at most k") {
  const GroupTable c6 = catalog_get("C(6)");
  const CheckOutcome a = check_nocamn(c6, SubgroupRef::whole(c6), 1);
  CHECK(a.holds);
  CHECK(a.lhs == "1/1");
  CHECK(a.rhs == "class 1");
  const GroupTable s3 = catalog_get("S(3)");
  const CheckOutcome b = check_nocamn(s3, normal_subgroups(s3)[1], 1);
  CHECK(b.holds);
  CHECK(b.lhs == "1/1");
  const CheckOutcome c = check_nocamn(s3, SubgroupRef::whole(s3), 3);
  CHECK(c.holds);
  CHECK(c.lhs == "7/8");
  CHECK(c.rhs == "not nilpotent");
}

TEST_CASE("gap bound outcomes") {
  const GroupTable s3 = catalog_get("S(3)");
  const SubgroupRef all = SubgroupRef::whole(s3);
  auto [d1, s1] = check_gap_bound(s3, all, 1);
  CHECK(d1.lhs == "1/2");
  CHECK(d1.rhs == "5/8");
  CHECK(d1.holds);
  CHECK(s1.rhs == "1/4");
  CHECK_FALSE(s1.holds);
  CHECK(s1.is_finding());
  CHECK_FALSE(s1.is_violation());

  auto [d2, s2] = check_gap_bound(s3, all, 2);
  CHECK(d2.lhs == "3/4");
  CHECK(d2.rhs == "13/16");
  CHECK(d2.holds);
  CHECK(s2.rhs == "5/8");
  CHECK(s2.is_finding());

  const GroupTable q8 = catalog_get("Q8");
  auto [dq, sq] = check_gap_bound(q8, SubgroupRef::whole(q8), 1);
  CHECK(dq.lhs == "5/8");
  CHECK(dq.holds);
  CHECK(dq.sharp);
  CHECK(sq.is_finding());

  auto [skip_d, skip_s] = check_gap_bound(q8, SubgroupRef::whole(q8), 2);
  CHECK(skip_d.skipped);
  CHECK(skip_s.skipped);
}

TEST_CASE("submultiplicativity outcomes") {
  const GroupTable s3 = catalog_get("S(3)");
  const auto n3 = normal_subgroups(s3);
  const CheckOutcome trivial_n = check_submultiplicativity(s3, n3[0], n3[2], 1);
  CHECK(trivial_n.lhs == "1/2");
  CHECK(trivial_n.rhs == "1/2");
  CHECK(trivial_n.holds);
  const CheckOutcome a3 = check_submultiplicativity(s3, n3[1], n3[2], 1);
  CHECK(a3.lhs == "1/2");
  CHECK(a3.rhs == "1/1");
  CHECK(a3.holds);
  CHECK_THROWS_AS(check_submultiplicativity(s3, n3[2], n3[1], 1), DefinitionError);

  const GroupTable ss = catalog_get("S(3)xS(3)");
  const auto ns = normal_subgroups(ss);
  const auto a3a3 = std::find_if(ns.begin(), ns.end(), [](const auto& n) { return n.size() == 9; });
  REQUIRE(a3a3 != ns.end());
  const CheckOutcome prod = check_submultiplicativity(ss, *a3a3, ns.back(), 1);
  CHECK(prod.lhs == "1/4");
  CHECK(prod.rhs == "1/1");
  CHECK(prod.holds);
}

TEST_CASE("monotonicity in the shifts") {
  const GroupTable s3 = catalog_get("S(3)");
  const auto whole = check_mtvv_monotonicity(s3, SubgroupRef::whole(s3), 2);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].lhs == whole[0].rhs);

  const auto a3 = check_mtvv_monotonicity(s3, normal_subgroups(s3)[1], 1);
  CHECK(a3.size() == 4);
  CHECK(all_hold(a3));
  ExactProb best_shifted;
  for (const auto& o : a3) {
    CHECK(o.rhs == "1/1");
    if (o.witness["shifts"] != nlohmann::json::array({0, 0})) best_shifted = std::max(best_shifted, ExactProb::parse(o.lhs));
  }
  CHECK(best_shifted == P(1, 3));

  const GroupTable s4 = catalog_get("S(4)");
  for (const auto& n : normal_subgroups(s4)) CHECK(all_hold(check_mtvv_monotonicity(s4, n, 2)));
}

TEST_CASE("longest series with non-nilpotent factors") {
  CHECK(max_bad_series_length(catalog_get("C(6)"), 1).r == -1);
  CHECK(max_bad_series_length(catalog_get("C(1)"), 1).r == -1);
  const SeriesResult s3 = max_bad_series_length(catalog_get("S(3)"), 1);
  CHECK(s3.r == 0);
  CHECK(s3.factors() == 1);
  const SeriesResult ss = max_bad_series_length(catalog_get("S(3)xS(3)"), 1);
  CHECK(ss.r == 1);
  REQUIRE(ss.chain.size() == 3);
  CHECK(ss.chain[0].size() == 36);
  CHECK(ss.chain[1].size() == 6);
  CHECK(ss.chain[2].size() == 1);

  for (const auto& name : default_corpus_names()) {
    const GroupTable g = catalog_get(name);
    if (normal_subgroups(g).size() > 24) continue;
    for (std::uint32_t k = 1; k <= 2; ++k) {
      CAPTURE(name);
      CAPTURE(k);
      CHECK(max_bad_series_length(g, k).r == bad_chain_oracle(g, k));
    }
  }
}

TEST_CASE("series bound outcomes") {
  auto [d, s] = check_series_bound(catalog_get("S(3)"), 1);
  CHECK(d.lhs == "0");
  CHECK(std::stod(d.rhs) == doctest::Approx(std::log(0.5) / std::log(0.625)));
  CHECK(d.holds);

  auto [dd, ss] = check_series_bound(catalog_get("S(3)xS(3)"), 1);
  CHECK(dd.lhs == "1");
  CHECK(std::stod(dd.rhs) == doctest::Approx(std::log(0.25) / std::log(0.625)));
  CHECK(dd.holds);
  CHECK(ss.lhs == "1");
  CHECK(std::stod(ss.rhs) == doctest::Approx(1.0));
  CHECK_FALSE(ss.holds);
  CHECK(ss.is_finding());

  auto [td, ts] = check_series_bound(catalog_get("C(1)"), 1);
  CHECK(td.skipped);
  CHECK(ts.skipped);
  auto [ad, as] = check_series_bound(catalog_get("C(4)"), 2);
  CHECK(ad.lhs == "-1");
  CHECK(ad.holds);
  CHECK(as.holds);
}

TEST_CASE("corpus runs") {
  CorpusConfig config;
  const VerificationReport empty = run_corpus({}, config);
  CHECK(empty.outcomes.empty());
  CHECK(empty.ok());

  std::vector<CorpusEntry> corpus = catalog_corpus({"S(3)", "Q8", "C(4)", "S(6)"}, 100);
  const VerificationReport r = run_corpus(corpus, config);
  bool s6_skipped = false;
  for (const auto& s : r.skipped) s6_skipped |= s.group == "S(6)" && s.check.empty();
  CHECK(s6_skipped);
  CHECK(r.checks() > 0);
  // S(3) and Q8 at every k hold for the whole group; A3 in S3 breaks the recursion bound at k = 1
  std::uint64_t proper = 0;
  for (const auto& o : r.outcomes)
    if (o.is_violation()) {
      CHECK(o.check == check_id::center_recursion);
      CHECK(o.params["H_order"].get<unsigned>() < 8);
      ++proper;
    }
  CHECK(proper > 0);

  bool q8_sharp = false, s3_sharp = false;
  for (const auto* o : r.sharpness()) {
    q8_sharp |= o->group == "Q8" && o->check == check_id::gap_bound_derived && o->k == 1 && o->lhs == "5/8";
    s3_sharp |= o->group == "S(3)" && o->check == check_id::center_recursion && o->k == 2 &&
                o->params["H_order"] == 6 && o->lhs == "3/4";
  }
  CHECK(q8_sharp);
  CHECK(s3_sharp);

  bool s3_stated = false;
  for (const auto* o : r.findings())
    s3_stated |= o->group == "S(3)" && o->check == check_id::gap_bound_stated && o->k == 2 && o->lhs == "3/4";
  CHECK(s3_stated);

  // thread count and repetition do not change the serialized report
  CorpusConfig threaded = config;
  threaded.threads = 4;
  const std::string a = to_json(r, config).dump();
  CHECK(to_json(run_corpus(corpus, config), config).dump() == a);
  CHECK(to_json(run_corpus(corpus, threaded), config).dump() == a);
  CHECK(to_json(r, config)["environment"]["version"] == kReportVersion);
  CHECK_FALSE(to_json(r, config)["summary"].contains("seconds"));

  std::ostringstream csv;
  write_csv(csv, r);
  CHECK(csv.str().rfind("group,k,check,lhs,rhs,holds\n", 0) == 0);
  std::ostringstream table;
  write_table(table, r);
  CHECK(table.str().find("gap_bound_stated") != std::string::npos);
}

TEST_CASE("abelian corpus skips every gap check") {
  CorpusConfig config;
  const VerificationReport r = run_corpus(catalog_corpus({"C(2)", "C(4)", "C(2)xC(2)"}), config);
  // the only failures: k = 1 recursion bound with a first shift outside a proper H
  for (const auto& o : r.outcomes)
    if (o.is_violation()) {
      CHECK(o.check == check_id::center_recursion);
      CHECK(o.k == 1);
      CHECK(o.lhs == "1/1");
      CHECK(o.rhs == "1/2");
    }
  for (const auto& o : r.outcomes) {
    CHECK(o.check != check_id::gap_bound_derived);
    CHECK(o.check != check_id::gap_bound_stated);
  }
  std::size_t gap_skips = 0;
  for (const auto& s : r.skipped) gap_skips += s.check == check_id::gap_bound_derived;
  CHECK(gap_skips > 0);
}

TEST_CASE("check selection") {
  CorpusConfig config;
  config.checks = {check_id::nocamn};
  config.ks = {1};
  const VerificationReport r = run_corpus(catalog_corpus({"S(3)"}), config);
  REQUIRE_FALSE(r.outcomes.empty());
  for (const auto& o : r.outcomes) CHECK(o.check == check_id::nocamn);
}
