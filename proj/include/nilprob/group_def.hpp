#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "nilprob/catalog.hpp"
#include "nilprob/group_table.hpp"

namespace nilprob {

// Group-definition documents:
//   {"label": "...", "kind": "mul_table", "mul": [[...], ...]}
//   {"label": "...", "kind": "perm_gens", "gens": [[images...], ...]}
//   {"label": "...", "kind": "product",   "factors": [<definition>, ...]}
//   {"label": "...", "kind": "catalog",   "name": "S(3)"}
// "label" is optional for catalog definitions. Malformed documents raise
// DefinitionError.

GroupTable group_from_json(const nlohmann::json& doc, const BuildOptions& options = {});

/// Permutation generators of a perm_gens, catalog or product-of-those
/// definition; products act on the disjoint union.
PermGenerators perm_gens_from_json(const nlohmann::json& doc);

/// A "mul_table" definition reproducing g exactly.
nlohmann::json group_to_definition(const GroupTable& g);

nlohmann::json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& doc);

/// Reads a definition file (a single object). Throws DefinitionError.
nlohmann::json load_json_file(const std::string& path);

}  // namespace nilprob
