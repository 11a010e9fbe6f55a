#include "nilprob/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <regex>

#include "nilprob/errors.hpp"

namespace nilprob {
namespace {

std::vector<std::string> split_factors(std::string_view name) {
  std::string compact;
  for (std::size_t i = 0; i < name.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(name[i]);
    if (std::isspace(c)) continue;
    // U+00D7 MULTIPLICATION SIGN
    if (c == 0xC3 && i + 1 < name.size() && static_cast<unsigned char>(name[i + 1]) == 0x97) {
      compact += '*';
      ++i;
      continue;
    }
    compact += static_cast<char>(c == 'x' || c == 'X' ? '*' : c);
  }
  std::vector<std::string> factors;
  std::string current;
  int depth = 0;
  for (char c : compact) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '*' && depth == 0) {
      factors.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  factors.push_back(current);
  for (const auto& f : factors)
    if (f.empty()) throw UnknownCatalogName(std::string(name));
  return factors;
}

struct Term {
  std::string family;  // canonical family spelling
  std::uint32_t param = 0;
};

Term parse_term(const std::string& raw, std::string_view whole) {
  std::string upper;
  for (char c : raw) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "Q8") return {"Q8", 8};
  if (upper == "SL(2,3)") return {"SL(2,3)", 0};
  static const std::regex term(R"(^(C|D|DIC|S|A|HEIS)\((\d{1,6})\)$)");
  std::smatch m;
  if (!std::regex_match(upper, m, term)) throw UnknownCatalogName(std::string(whole));
  const auto param = static_cast<std::uint32_t>(std::stoul(m[2].str()));
  const std::string fam = m[1].str();
  const auto bad = [&] { return UnknownCatalogName(std::string(whole)); };
  if (fam == "C") {
    if (param < 1) throw bad();
    return {"C", param};
  }
  if (fam == "D") {
    if (param < 2 || param % 2 != 0) throw bad();
    return {"D", param};
  }
  if (fam == "DIC") {
    if (param < 2) throw bad();
    return {"Dic", param};
  }
  if (fam == "S" || fam == "A") {
    if (param < 1 || param > 8) throw bad();
    return {fam, param};
  }
  if (param != 2 && param != 3 && param != 5) throw bad();
  return {"Heis", param};
}

std::string term_label(const Term& t) {
  if (t.family == "Q8" || t.family == "SL(2,3)") return t.family;
  return t.family + "(" + std::to_string(t.param) + ")";
}

Permutation perm(std::vector<std::uint32_t> image) { return Permutation(std::move(image)); }

// Left-regular action of Dic(n) on its elements a^i x^j, index i + 2n*j.
PermGenerators dicyclic(std::uint32_t n) {
  const std::uint32_t m = 2 * n;
  const std::uint32_t degree = 2 * m;
  auto product = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint32_t l) {
    // (a^i x^j)(a^k x^l)
    if (j == 0) return std::pair{(i + k) % m, l};
    // x a^k = a^-k x
    const std::uint32_t e = (i + m - k % m) % m;
    if (l == 0) return std::pair{e, 1u};
    return std::pair{(e + n) % m, 0u};  // x^2 = a^n
  };
  auto left_mult = [&](std::uint32_t gi, std::uint32_t gj) {
    std::vector<std::uint32_t> image(degree);
    for (std::uint32_t p = 0; p < degree; ++p) {
      const auto [i, j] = product(gi, gj, p % m, p / m);
      image[p] = i + m * j;
    }
    return perm(std::move(image));
  };
  return {degree, {left_mult(1, 0), left_mult(0, 1)}};
}

PermGenerators generators_for(const Term& t) {
  const std::uint32_t n = t.param;
  if (t.family == "C") {
    std::vector<std::uint32_t> image(n);
    for (std::uint32_t i = 0; i < n; ++i) image[i] = (i + 1) % n;
    return {n, {perm(image)}};
  }
  if (t.family == "D") {
    const std::uint32_t half = n / 2;
    if (half == 1) return {2, {perm({1, 0})}};
    if (half == 2) return {4, {perm({1, 0, 3, 2}), perm({2, 3, 0, 1})}};
    std::vector<std::uint32_t> rot(half), refl(half);
    for (std::uint32_t i = 0; i < half; ++i) {
      rot[i] = (i + 1) % half;
      refl[i] = (half - i) % half;
    }
    return {half, {perm(rot), perm(refl)}};
  }
  if (t.family == "Dic") return dicyclic(n);
  if (t.family == "Q8") return dicyclic(2);
  if (t.family == "S") {
    if (n == 1) return {1, {Permutation::identity(1)}};
    std::vector<std::uint32_t> cycle(n);
    for (std::uint32_t i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
    return {n, {Permutation::from_cycles(n, {{0, 1}}), perm(cycle)}};
  }
  if (t.family == "A") {
    if (n < 3) return {n, {Permutation::identity(n)}};
    PermGenerators out{n, {}};
    for (std::uint32_t i = 2; i < n; ++i) out.gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
    return out;
  }
  if (t.family == "Heis") {
    const std::uint32_t p = n;
    std::vector<std::uint32_t> shift(p * p), shear(p * p);
    for (std::uint32_t v = 0; v < p; ++v)
      for (std::uint32_t u = 0; u < p; ++u) {
        shift[u + p * v] = (u + 1) % p + p * v;
        shear[u + p * v] = u + p * ((v + u) % p);
      }
    return {p * p, {perm(shift), perm(shear)}};
  }
  // SL(2,3) on the 8 nonzero row vectors (a, b), point 3a + b - 1.
  auto act = [](std::uint32_t m00, std::uint32_t m01, std::uint32_t m10, std::uint32_t m11) {
    std::vector<std::uint32_t> image(8);
    for (std::uint32_t p = 0; p < 8; ++p) {
      const std::uint32_t a = (p + 1) / 3, b = (p + 1) % 3;
      const std::uint32_t c = (a * m00 + b * m10) % 3, d = (a * m01 + b * m11) % 3;
      image[p] = 3 * c + d - 1;
    }
    return Permutation(std::move(image));
  };
  return {8, {act(1, 1, 0, 1), act(1, 0, 1, 1)}};
}

}  // namespace

std::string canonical_catalog_name(std::string_view name) {
  std::string out;
  for (const auto& f : split_factors(name)) {
    if (!out.empty()) out += 'x';
    out += term_label(parse_term(f, name));
  }
  return out;
}

PermGenerators catalog_generators(std::string_view name) {
  PermGenerators out{0, {}};
  std::vector<PermGenerators> parts;
  for (const auto& f : split_factors(name)) parts.push_back(generators_for(parse_term(f, name)));
  for (const auto& p : parts) out.degree += p.degree;
  std::uint32_t offset = 0;
  for (const auto& p : parts) {
    for (const auto& g : p.gens) {
      std::vector<std::uint32_t> image(out.degree);
      for (std::uint32_t i = 0; i < out.degree; ++i) image[i] = i;
      for (std::uint32_t i = 0; i < p.degree; ++i) image[offset + i] = offset + g[i];
      out.gens.emplace_back(std::move(image));
    }
    offset += p.degree;
  }
  return out;
}

GroupTable catalog_get(std::string_view name, std::uint32_t max_order) {
  BuildOptions options;
  options.max_order = max_order;
  std::optional<GroupTable> acc;
  for (const auto& f : split_factors(name)) {
    const Term t = parse_term(f, name);
    GroupTable factor = build_from_perm_gens(generators_for(t).gens, term_label(t), options);
    acc = acc ? direct_product(*acc, factor, max_order) : std::move(factor);
  }
  return acc->with_label(canonical_catalog_name(name));
}

std::vector<CatalogFamily> catalog_families() {
  return {
      {"C(n)", "cyclic group of order n", {"C(1)", "C(6)"}},
      {"D(2n)", "dihedral group of order 2n", {"D(6)", "D(8)"}},
      {"Q8", "quaternion group of order 8", {"Q8"}},
      {"Dic(n)", "dicyclic group of order 4n, n >= 2", {"Dic(3)", "Dic(4)"}},
      {"S(n)", "symmetric group on n points, n <= 8", {"S(3)", "S(4)"}},
      {"A(n)", "alternating group on n points, n <= 8", {"A(4)", "A(5)"}},
      {"Heis(p)", "Heisenberg group of order p^3, p in {2,3,5}", {"Heis(3)"}},
      {"SL(2,3)", "special linear group of 2x2 matrices over F_3", {"SL(2,3)"}},
      {"AxB", "direct product of catalog expressions", {"S(3)xS(3)", "Q8xC(2)"}},
  };
}

std::vector<std::string> default_corpus_names() {
  return {
      "C(1)",      "C(2)",      "C(3)",      "C(4)",     "C(6)",      "C(8)",
      "C(2)xC(2)", "C(2)xC(4)", "S(3)",      "D(8)",     "Q8",        "D(10)",
      "D(12)",     "Dic(3)",    "A(4)",      "D(14)",    "D(16)",     "Dic(4)",
      "D(18)",     "S(3)xC(3)", "D(20)",     "Dic(5)",   "S(4)",      "SL(2,3)",
      "Dic(6)",    "D(24)",     "S(3)xC(4)", "Q8xC(3)",  "D(8)xC(3)", "A(4)xC(2)",
      "Heis(3)",   "D(16)xC(2)", "Q8xC(2)",  "D(8)xC(2)", "Dic(8)",   "D(32)",
      "S(3)xS(3)", "Heis(2)",   "S(4)xC(2)", "SL(2,3)xC(2)", "D(48)", "Dic(12)",
      "A(5)",      "D(64)",     "Dic(16)",   "S(3)xC(2)", "Q8xC(2)xC(2)", "D(8)xQ8",
  };
}

}  // namespace nilprob
