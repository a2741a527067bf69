#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "pbr/classical.hpp"
#include "pbr/deform.hpp"
#include "pbr/oriented.hpp"
#include "pbr/pbr.hpp"

// JSON forms:
//   Pbr        {"domain": [...], "codomain": [...],
//               "edges": [["x1","d","y1","c"], ...]}
//   relation   {"domain": [...], "codomain": [...], "pairs": [["x","y"], ...]}
//   partition  {"domain": [...], "codomain": [...],
//               "blocks": [[["x","d"],["y","c"]], ...]}
//   O-object   {"outer": [...], "inner": [...]}
// A deformed Pbr adds an optional "exponent".  Unknown fields are rejected
// with ParseError; structurally valid input that fails validation raises the
// validation error (DuplicateLabel and so on).

namespace pbr {

  using Json = nlohmann::json;

  Json             to_json(Pbr const& p);
  Json             to_json(DeformedMorphism const& m);
  Json             to_json(BinaryRelation const& r);
  Json             to_json(Partition const& p);
  Json             to_json(OObject const& o);

  Pbr              pbr_from_json(Json const& j);
  DeformedMorphism deformed_from_json(Json const& j);
  BinaryRelation   relation_from_json(Json const& j);
  Partition        partition_from_json(Json const& j);
  OObject          oobject_from_json(Json const& j);

  // Parses text as JSON; throws ParseError on malformed input.
  Json parse_json(std::string_view text);

}  // namespace pbr
