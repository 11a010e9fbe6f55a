#include <doctest.h>

#include "nilprob/catalog.hpp"
#include "nilprob/errors.hpp"
#include "nilprob/group_def.hpp"
#include "nilprob/group_table.hpp"
#include "oracle.hpp"

using namespace nilprob;
using nlohmann::json;

namespace {

std::vector<oracle::Img> oracle_elements(const std::string& name) {
  std::vector<oracle::Img> gens;
  for (const auto& p : catalog_generators(name).gens) gens.emplace_back(p.images().begin(), p.images().end());
  return oracle::closure(gens);
}

}  // namespace

TEST_CASE("build_from_table accepts groups and names the broken law otherwise") {
  const GroupTable trivial = build_from_table(1, {0}, "1");
  CHECK(trivial.order() == 1);
  CHECK(trivial.inv(0) == 0);

  const GroupTable c2 = build_from_table(2, {0, 1, 1, 0}, "C2");
  CHECK(c2.order() == 2);
  CHECK(c2.inv(1) == 1);

  try {
    build_from_table(3, {0, 1, 2, 1, 0, 2, 2, 2, 0}, "bad");
    FAIL("expected NotAGroup");
  } catch (const NotAGroup& e) {
    CHECK(e.law() == "associativity");
    // witness must really violate associativity in the given table
    const std::vector<Element> mul{0, 1, 2, 1, 0, 2, 2, 2, 0};
    auto m = [&](Element a, Element b) { return mul[a * 3 + b]; };
    CHECK(m(m(e.witness_a(), e.witness_b()), e.witness_c()) !=
          m(e.witness_a(), m(e.witness_b(), e.witness_c())));
  }

  CHECK_THROWS_AS(build_from_table(2, {1, 0, 0, 1}, "no identity at 0"), NotAGroup);
  CHECK_THROWS_AS(build_from_table(2, {0, 1, 1, 1}, "no inverse"), NotAGroup);
  CHECK_THROWS_AS(build_from_table(2, {0, 1, 1, 5}, "range"), NotAGroup);
  CHECK_THROWS_AS(build_from_table(2, {0, 1, 1}, "short"), DefinitionError);
}

TEST_CASE("randomized associativity spot check catches a corrupted large table") {
  const GroupTable big = catalog_get("S(4)xC(12)");
  REQUIRE(big.order() == 288);
  std::vector<Element> mul(big.table_data(), big.table_data() + 288 * 288);
  // Swap two non-identity columns in every row of a block: breaks associativity
  // but keeps identity and inverses of the untouched rows.
  for (Element a = 100; a < 288; ++a) std::swap(mul[a * 288 + 150], mul[a * 288 + 151]);
  BuildOptions opts;
  CHECK_THROWS_AS(build_from_table(288, mul, "bad", opts), NotAGroup);

  BuildOptions exhaustive;
  exhaustive.force_exhaustive = true;
  std::vector<Element> good(big.table_data(), big.table_data() + 288 * 288);
  CHECK(build_from_table(288, good, "ok", exhaustive).same_table(big));
}

TEST_CASE("build_from_perm_gens") {
  const GroupTable c2 = build_from_perm_gens({Permutation({1, 0})}, "C2");
  CHECK(c2.order() == 2);

  const auto s3 = build_from_perm_gens({Permutation({1, 0, 2}), Permutation({1, 2, 0})}, "S3");
  CHECK(s3.order() == oracle::closure({{1, 0, 2}, {1, 2, 0}}).size());
  CHECK(s3.order() == 6);

  BuildOptions cap4;
  cap4.max_order = 4;
  try {
    build_from_perm_gens({Permutation({1, 2, 3, 4, 0})}, "C5", cap4);
    FAIL("expected OrderExceeded");
  } catch (const OrderExceeded& e) {
    CHECK(e.order_lower_bound() == 5);
  }
}

TEST_CASE("perm-built tables use lexicographic image order with the identity first") {
  const auto gens = catalog_generators("S(4)").gens;
  const auto elements = enumerate_perm_group(gens);
  CHECK(elements.front().is_identity());
  CHECK(std::is_sorted(elements.begin(), elements.end()));
  const GroupTable g = build_from_perm_gens(gens, "S4");
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) CHECK(elements[g.mul(a, b)] == compose(elements[a], elements[b]));
}

TEST_CASE("direct products") {
  const GroupTable c2 = catalog_get("C(2)");
  const GroupTable v4 = direct_product(c2, c2);
  CHECK(v4.order() == 4);
  for (Element x = 0; x < 4; ++x) CHECK(v4.inv(x) == x);

  const GroupTable s3 = catalog_get("S(3)");
  CHECK(direct_product(s3, catalog_get("C(1)")).same_table(s3));
  const GroupTable s3s3 = direct_product(s3, s3);
  CHECK(s3s3.order() == 36);
  // index (g, h) = g*|b| + h
  CHECK(s3s3.mul(2 * 6 + 3, 4 * 6 + 5) == s3.mul(2, 4) * 6 + s3.mul(3, 5));
  CHECK_THROWS_AS(direct_product(s3s3, s3s3, 1000), OrderExceeded);

  for (const char* a : {"C(3)", "Q8", "S(3)"})
    for (const char* b : {"C(2)", "D(8)"})
      CHECK(direct_product(catalog_get(a), catalog_get(b)).order() == catalog_get(a).order() * catalog_get(b).order());
}

TEST_CASE("catalog examples") {
  CHECK(catalog_get("C(1)").order() == 1);
  const GroupTable q8 = catalog_get("Q8");
  CHECK(q8.order() == 8);
  CHECK(element_order_census(q8).at(2) == 1);
  CHECK(catalog_get("S(4)").order() == 24);
  CHECK(catalog_get("Dic(2)").same_table(q8));
  CHECK(catalog_get(" s(3) × c(2) ").label() == "S(3)xC(2)");
  CHECK(canonical_catalog_name("dic(3)*q8") == "Dic(3)xQ8");
  for (const char* bad : {"Foo", "S(9)", "D(7)", "Heis(7)", "C(0)", "S(3)x", "Dic(1)"})
    CHECK_THROWS_AS(catalog_get(bad), UnknownCatalogName);
  CHECK_THROWS_AS(catalog_get("S(8)"), OrderExceeded);
}

TEST_CASE("documented element-order censuses") {
  using Census = std::map<std::uint32_t, std::uint32_t>;
  const std::map<std::string, Census> documented{
      {"S(3)", {{1, 1}, {2, 3}, {3, 2}}},
      {"Q8", {{1, 1}, {2, 1}, {4, 6}}},
      {"D(8)", {{1, 1}, {2, 5}, {4, 2}}},
      {"Heis(2)", {{1, 1}, {2, 5}, {4, 2}}},
      {"A(4)", {{1, 1}, {2, 3}, {3, 8}}},
      {"S(4)", {{1, 1}, {2, 9}, {3, 8}, {4, 6}}},
      {"SL(2,3)", {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}},
      {"Dic(3)", {{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}},
      {"Heis(3)", {{1, 1}, {3, 26}}},
      {"Heis(5)", {{1, 1}, {5, 124}}},
      {"A(5)", {{1, 1}, {2, 15}, {3, 20}, {5, 24}}},
      {"C(6)", {{1, 1}, {2, 1}, {3, 2}, {6, 2}}},
  };
  for (const auto& [name, census] : documented) {
    CAPTURE(name);
    CHECK(element_order_census(catalog_get(name)) == census);
    CHECK(oracle::order_census(oracle_elements(name)) == census);
  }
}

TEST_CASE("catalog tables match closure enumeration on every family") {
  for (const char* name : {"C(5)", "D(6)", "D(2)", "D(4)", "D(12)", "Dic(4)", "S(1)", "S(2)", "A(1)", "A(3)",
                           "A(6)", "Heis(3)", "SL(2,3)", "S(5)"}) {
    CAPTURE(name);
    const auto elements = oracle_elements(name);
    const GroupTable g = catalog_get(name);
    CHECK(g.order() == elements.size());
    CHECK(element_order_census(g) == oracle::order_census(elements));
  }
}

TEST_CASE("group definition documents") {
  CHECK(group_from_json(json{{"kind", "catalog"}, {"name", "S(3)"}}).order() == 6);
  CHECK(group_from_json(json{{"kind", "perm_gens"}, {"label", "S3"}, {"gens", {{1, 0, 2}, {1, 2, 0}}}}).order() == 6);
  CHECK(group_from_json(json{{"kind", "mul_table"}, {"mul", {{0, 1}, {1, 0}}}}).order() == 2);
  const json product{{"kind", "product"},
                     {"factors", {json{{"kind", "catalog"}, {"name", "S(3)"}}, json{{"kind", "catalog"}, {"name", "C(2)"}}}}};
  CHECK(group_from_json(product).same_table(catalog_get("S(3)xC(2)")));
  CHECK(perm_gens_from_json(product).degree == 5);

  CHECK_THROWS_AS(group_from_json(json{{"kind", "bogus"}}), DefinitionError);
  CHECK_THROWS_AS(group_from_json(json{{"kind", "mul_table"}, {"mul", {{0, 1}}}}), DefinitionError);
  CHECK_THROWS_AS(group_from_json(json{{"kind", "perm_gens"}, {"gens", {{0, 0}}}}), DefinitionError);
  CHECK_THROWS_AS(group_from_json(json{{"kind", "perm_gens"}, {"gens", {{1, 0}, {0, 2, 1}}}}), DegreeMismatch);
  CHECK_THROWS_AS(group_from_json(json::array()), DefinitionError);
  CHECK_THROWS_AS(group_from_json(json{{"kind", "catalog"}, {"name", "Nope"}}), UnknownCatalogName);
}

TEST_CASE("emitted definitions re-parse to identical tables") {
  for (const auto& name : default_corpus_names()) {
    const GroupTable g = catalog_get(name);
    const json doc = json::parse(group_to_definition(g).dump());
    const GroupTable back = group_from_json(doc);
    CHECK(back.same_table(g));
    CHECK(back.label() == g.label());
    CHECK(back.fingerprint() == g.fingerprint());
  }
}

TEST_CASE("default corpus covers groups of order at most 64") {
  for (const auto& name : default_corpus_names()) CHECK(catalog_get(name).order() <= 64);
}
