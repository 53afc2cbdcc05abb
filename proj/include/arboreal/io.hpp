#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "arboreal/classify.hpp"
#include "arboreal/constructions.hpp"

namespace arboreal {

using Json = nlohmann::json;

/// Recursive {"perm":[...],"children":[...]} from the root; subtrees acting
/// trivially are written as null.
Json portrait_to_json(Portrait const &a);
Portrait portrait_from_json(SphericalIndex const &tree, Json const &j);

Json vertex_to_json(SphericalIndex const &m, VertexAddress const &v);
VertexAddress vertex_from_json(Json const &j);

/// A built system together with the configuration it came from.
struct BuiltSystem {
  std::string family;  ///< "product", "wreath", "odometer" or "system"
  std::optional<ProductConfig> product;
  std::optional<WreathConfig> wreath;
  std::uint32_t odometer_base = 0;
  LevelGroupSystem system;
};

/// Parses a product or wreath configuration, or a serialized system.
/// `depth_override` > 0 replaces the configured depth.
BuiltSystem system_from_json(Json const &j, std::size_t depth_override = 0);

/// Named presets: theorem1-default, alt-wreath, cyclic-wreath-<k>, odometer-<k>.
/// Tree-based presets take their depth from `depth` when it is positive.
std::optional<Json> preset_config(std::string const &name, std::size_t depth = 0);

Json system_to_json(BuiltSystem const &spec);

Json report_to_json(ChainReport const &r);
ChainReport report_from_json(Json const &j);
std::string report_to_csv(ChainReport const &r);

/// Stable 64-bit FNV-1a digest, printed as 16 hex digits.
std::string digest(std::string const &bytes);

} // namespace arboreal
