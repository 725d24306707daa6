#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tglab/annot.hpp"
#include "tglab/cospan.hpp"
#include "tglab/dpo.hpp"
#include "tglab/graph.hpp"
#include "tglab/tgl.hpp"

namespace tglab {

/// Malformed input: bad JSON, unknown or missing fields, dangling ids,
/// violated invariants. Messages name the offending location and item.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::string& path);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j, const std::string& where);

/// Maps only; domain and codomain travel separately.
nlohmann::json morphism_to_json(const Morphism& m);
Morphism morphism_from_json(const nlohmann::json& j, const Graph& dom, const Graph& cod,
                            const std::string& where);

nlohmann::json formula_to_json(const Formula& f);
Formula formula_from_json(const nlohmann::json& j, const std::string& where);

/// Graph fields plus "n" and "pairs"; in a pair, omitted items default to 0
/// in "lower" and "m" in "upper".
nlohmann::json atg_to_json(const MultiAnnotatedGraph& t);
MultiAnnotatedGraph atg_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json rule_to_json(const DpoRule& r);
DpoRule rule_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json word_to_json(const OpWord& w);
OpWord word_from_json(const nlohmann::json& j, const std::string& where);

}  // namespace tglab
