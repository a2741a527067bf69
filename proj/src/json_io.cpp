#include "pbr/json_io.hpp"

#include <algorithm>
#include <initializer_list>

namespace pbr {

  namespace {
    [[noreturn]] void fail(std::string const& detail) {
      throw Error(ErrorCode::parse_error, detail);
    }

    void expect_fields(Json const& j, std::initializer_list<char const*> required,
                       std::initializer_list<char const*> optional = {}) {
      if (!j.is_object()) {
        fail("expected a JSON object");
      }
      for (auto const* key : required) {
        if (!j.contains(key)) {
          fail(std::string("missing field '") + key + "'");
        }
      }
      for (auto const& [key, value] : j.items()) {
        auto known = [&](auto const& list) {
          return std::any_of(list.begin(), list.end(),
                             [&](char const* k) { return key == k; });
        };
        if (!known(required) && !known(optional)) {
          fail("unknown field '" + key + "'");
        }
      }
    }

    std::string string_at(Json const& j, char const* what) {
      if (!j.is_string()) {
        fail(std::string(what) + " must be a string");
      }
      return j.get<std::string>();
    }

    Json const& array_at(Json const& j, char const* key) {
      Json const& a = j.at(key);
      if (!a.is_array()) {
        fail(std::string("field '") + key + "' must be an array");
      }
      return a;
    }

    Labels labels_at(Json const& j, char const* key) {
      Labels result;
      for (auto const& l : array_at(j, key)) {
        result.push_back(string_at(l, "label"));
      }
      return result;
    }

    Side side_from(Json const& j) {
      auto s = string_at(j, "side");
      if (s == "d") {
        return Side::domain;
      }
      if (s == "c") {
        return Side::codomain;
      }
      fail("side must be \"d\" or \"c\", got \"" + s + "\"");
    }

    char const* side_name(Side s) {
      return s == Side::domain ? "d" : "c";
    }

    Pbr pbr_fields(Json const& j) {
      std::vector<Edge> edges;
      for (auto const& e : array_at(j, "edges")) {
        if (!e.is_array() || e.size() != 4) {
          fail("an edge must be [label, side, label, side]");
        }
        edges.push_back({{string_at(e[0], "label"), side_from(e[1])},
                         {string_at(e[2], "label"), side_from(e[3])}});
      }
      return Pbr::from_edges(labels_at(j, "domain"), labels_at(j, "codomain"),
                             edges);
    }
  }  // namespace

  Json to_json(Pbr const& p) {
    Json edges = Json::array();
    for (auto const& e : p.edges()) {
      edges.push_back({e.source.label, side_name(e.source.side), e.target.label,
                       side_name(e.target.side)});
    }
    return {{"domain", p.domain()}, {"codomain", p.codomain()}, {"edges", edges}};
  }

  Json to_json(DeformedMorphism const& m) {
    Json j        = to_json(m.pbr);
    j["exponent"] = m.exponent;
    return j;
  }

  Json to_json(BinaryRelation const& r) {
    Json pairs = Json::array();
    for (auto const& [x, y] : r.pairs()) {
      pairs.push_back({x, y});
    }
    return {{"domain", r.domain()}, {"codomain", r.codomain()}, {"pairs", pairs}};
  }

  Json to_json(Partition const& p) {
    Json blocks = Json::array();
    for (auto const& block : p.blocks()) {
      Json b = Json::array();
      for (auto v : block) {
        auto vertex = p.vertex(v);
        b.push_back({vertex.label, side_name(vertex.side)});
      }
      blocks.push_back(b);
    }
    return {{"domain", p.domain()}, {"codomain", p.codomain()}, {"blocks", blocks}};
  }

  Json to_json(OObject const& o) {
    return {{"outer", o.outer()}, {"inner", o.inner()}};
  }

  Pbr pbr_from_json(Json const& j) {
    expect_fields(j, {"domain", "codomain", "edges"});
    return pbr_fields(j);
  }

  DeformedMorphism deformed_from_json(Json const& j) {
    expect_fields(j, {"domain", "codomain", "edges"}, {"exponent"});
    std::uint64_t exponent = 0;
    if (j.contains("exponent")) {
      if (!j["exponent"].is_number_unsigned()) {
        fail("exponent must be a non-negative integer");
      }
      exponent = j["exponent"].get<std::uint64_t>();
    }
    return {pbr_fields(j), exponent};
  }

  BinaryRelation relation_from_json(Json const& j) {
    expect_fields(j, {"domain", "codomain", "pairs"});
    std::vector<BinaryRelation::Pair> pairs;
    for (auto const& p : array_at(j, "pairs")) {
      if (!p.is_array() || p.size() != 2) {
        fail("a pair must be [x, y]");
      }
      pairs.emplace_back(string_at(p[0], "label"), string_at(p[1], "label"));
    }
    return BinaryRelation::from_pairs(labels_at(j, "domain"),
                                      labels_at(j, "codomain"), pairs);
  }

  Partition partition_from_json(Json const& j) {
    expect_fields(j, {"domain", "codomain", "blocks"});
    std::vector<std::vector<Vertex>> blocks;
    for (auto const& b : array_at(j, "blocks")) {
      if (!b.is_array()) {
        fail("a block must be an array of [label, side]");
      }
      auto& block = blocks.emplace_back();
      for (auto const& v : b) {
        if (!v.is_array() || v.size() != 2) {
          fail("a block member must be [label, side]");
        }
        block.push_back({string_at(v[0], "label"), side_from(v[1])});
      }
    }
    return Partition::from_blocks(labels_at(j, "domain"),
                                  labels_at(j, "codomain"), blocks);
  }

  OObject oobject_from_json(Json const& j) {
    expect_fields(j, {"outer", "inner"});
    return OObject(labels_at(j, "outer"), labels_at(j, "inner"));
  }

  Json parse_json(std::string_view text) {
    try {
      return Json::parse(text);
    } catch (Json::parse_error const& e) {
      fail(e.what());
    }
  }

}  // namespace pbr
