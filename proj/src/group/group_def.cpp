#include "nilprob/group_def.hpp"

#include <fstream>
#include <optional>

#include "nilprob/errors.hpp"

namespace nilprob {
namespace {

using nlohmann::json;

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw DefinitionError(std::string("group definition is missing \"") + key + "\"");
  return doc.at(key);
}

std::string kind_of(const json& doc) {
  const json& kind = field(doc, "kind");
  if (!kind.is_string()) throw DefinitionError("\"kind\" must be a string");
  return kind.get<std::string>();
}

std::string label_of(const json& doc, std::string fallback) {
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) throw DefinitionError("\"label\" must be a string");
    return doc.at("label").get<std::string>();
  }
  return fallback;
}

std::vector<Permutation> gens_of(const json& doc) {
  const json& gens = field(doc, "gens");
  if (!gens.is_array() || gens.empty())
    throw DefinitionError("\"gens\" must be a nonempty array of image arrays");
  std::vector<Permutation> out;
  for (const auto& g : gens) out.push_back(permutation_from_json(g));
  for (const auto& p : out)
    if (p.degree() != out.front().degree()) throw DegreeMismatch(out.front().degree(), p.degree());
  return out;
}

}  // namespace

Permutation permutation_from_json(const json& doc) {
  if (!doc.is_array()) throw DefinitionError("a permutation is an array of images");
  std::vector<std::uint32_t> image;
  for (const auto& v : doc) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw DefinitionError("permutation images must be non-negative integers");
    image.push_back(v.get<std::uint32_t>());
  }
  if (image.empty()) throw DefinitionError("empty permutation");
  return Permutation(std::move(image));
}

json permutation_to_json(const Permutation& p) {
  return json(std::vector<std::uint32_t>(p.images().begin(), p.images().end()));
}

GroupTable group_from_json(const json& doc, const BuildOptions& options) {
  const std::string kind = kind_of(doc);
  try {
    if (kind == "catalog") {
      const json& name = field(doc, "name");
      if (!name.is_string()) throw DefinitionError("\"name\" must be a string");
      GroupTable g = catalog_get(name.get<std::string>(), options.max_order);
      return doc.contains("label") ? g.with_label(label_of(doc, "")) : g;
    }
    if (kind == "perm_gens") return build_from_perm_gens(gens_of(doc), label_of(doc, "perm_gens"), options);
    if (kind == "mul_table") {
      const json& rows = field(doc, "mul");
      if (!rows.is_array() || rows.empty()) throw DefinitionError("\"mul\" must be a nonempty matrix");
      const auto n = static_cast<std::uint32_t>(rows.size());
      std::vector<Element> mul;
      mul.reserve(static_cast<std::size_t>(n) * n);
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != n) throw DefinitionError("\"mul\" must be square");
        for (const auto& v : row) {
          if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw DefinitionError("\"mul\" entries must be non-negative integers");
          mul.push_back(v.get<Element>());
        }
      }
      return build_from_table(n, std::move(mul), label_of(doc, "mul_table"), options);
    }
    if (kind == "product") {
      const json& factors = field(doc, "factors");
      if (!factors.is_array() || factors.empty()) throw DefinitionError("\"factors\" must be a nonempty array");
      std::optional<GroupTable> acc;
      for (const auto& f : factors) {
        GroupTable g = group_from_json(f, options);
        acc = acc ? direct_product(*acc, g, options.max_order) : std::move(g);
      }
      return doc.contains("label") ? acc->with_label(label_of(doc, "")) : *acc;
    }
  } catch (const json::exception& e) {
    throw DefinitionError(std::string("malformed group definition: ") + e.what());
  }
  throw DefinitionError("unknown group definition kind \"" + kind + "\"");
}

PermGenerators perm_gens_from_json(const json& doc) {
  const std::string kind = kind_of(doc);
  if (kind == "perm_gens") {
    auto gens = gens_of(doc);
    return {gens.front().degree(), std::move(gens)};
  }
  if (kind == "catalog") {
    const json& name = field(doc, "name");
    if (!name.is_string()) throw DefinitionError("\"name\" must be a string");
    return catalog_generators(name.get<std::string>());
  }
  if (kind == "product") {
    const json& factors = field(doc, "factors");
    if (!factors.is_array() || factors.empty()) throw DefinitionError("\"factors\" must be a nonempty array");
    std::vector<PermGenerators> parts;
    PermGenerators out{0, {}};
    for (const auto& f : factors) {
      parts.push_back(perm_gens_from_json(f));
      out.degree += parts.back().degree;
    }
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
  throw DefinitionError("a permutation-generator definition must have kind perm_gens, catalog or product");
}

json group_to_definition(const GroupTable& g) {
  json rows = json::array();
  for (Element a = 0; a < g.order(); ++a) {
    const auto r = g.row(a);
    rows.push_back(std::vector<Element>(r.begin(), r.end()));
  }
  return json{{"label", g.label()}, {"kind", "mul_table"}, {"mul", std::move(rows)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DefinitionError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DefinitionError("cannot parse " + path + ": " + e.what());
  }
}

}  // namespace nilprob
