// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/entity_record.hpp"

#include <json.hpp>

namespace wdqual {

namespace {

using nlohmann::json;

EntityKind kind_from_type(const std::string& type, const EntityId& id) {
  if (type == "item") return EntityKind::Item;
  if (type == "property") return EntityKind::Property;
  if (type == "lexeme") return EntityKind::Lexeme;
  if (!type.empty()) return EntityKind::Other;
  return id.kind();
}

SnakValue decode_datavalue(const std::string& datatype, const json& dv) {
  const std::string value_type = dv.value("type", "");

  if (value_type == "wikibase-entityid") {
    const auto& v = dv.at("value");
    if (v.contains("id")) {
      if (auto id = EntityId::parse(v.at("id").get<std::string>())) return SnakValue::entity_ref(*id);
    } else if (v.contains("numeric-id")) {
      // older dumps spell items as {"entity-type":"item","numeric-id":42}
      const auto num = v.at("numeric-id").get<std::uint64_t>();
      const std::string et = v.value("entity-type", "item");
      if (et == "item") return SnakValue::entity_ref(EntityId::item(num));
      if (et == "property") return SnakValue::entity_ref(EntityId::property(num));
      if (et == "lexeme") return SnakValue::entity_ref(EntityId::lexeme(num));
    }
    return SnakValue::other(dv.dump());
  }
  if (value_type == "time") {
    const auto& v = dv.at("value");
    auto t = parse_dump_time(v.at("time").get<std::string>(), v.value("precision", kPrecisionDay),
                             v.value("calendarmodel", ""));
    if (t) return SnakValue::time(*t);
    return SnakValue::other(dv.dump());
  }
  if (value_type == "quantity") {
    const auto& v = dv.at("value");
    QuantityValue q;
    q.amount = v.at("amount").get<std::string>();
    const std::string unit = v.value("unit", "1");
    if (unit != "1" && !unit.empty()) {
      auto slash = unit.rfind('/');
      auto raw = slash == std::string::npos ? unit : unit.substr(slash + 1);
      if (auto id = EntityId::parse(raw)) q.unit = *id;
    }
    return SnakValue::quantity(std::move(q));
  }
  if (value_type == "string") {
    const std::string s = dv.at("value").get<std::string>();
    if (datatype == "url") return SnakValue::url(s);
    if (datatype == "external-id") return SnakValue::external_id(s);
    return SnakValue::string(s);
  }
  if (value_type == "monolingualtext") {
    return SnakValue::monolingual(dv.at("value").value("text", ""));
  }
  if (value_type == "globecoordinate") {
    return SnakValue::coordinate(dv.at("value").dump());
  }
  return SnakValue::other(dv.dump());
}

SnakValue decode_snak(const json& snak) {
  const std::string snaktype = snak.value("snaktype", "value");
  if (snaktype == "novalue") return SnakValue::no_value();
  if (snaktype == "somevalue") return SnakValue::some_value();
  if (!snak.contains("datavalue")) return SnakValue::other("{}");
  return decode_datavalue(snak.value("datatype", ""), snak.at("datavalue"));
}

StatementRank decode_rank(const std::string& rank) {
  if (rank == "preferred") return StatementRank::Preferred;
  if (rank == "deprecated") return StatementRank::Deprecated;
  return StatementRank::Normal;
}

}  // namespace

bool parse_entity_json(std::string_view line, EntityRecord& out, EntityParseError& error) {
  json entity = json::parse(line, nullptr, false);
  if (entity.is_discarded() || !entity.is_object()) {
    error.message = "not a JSON object";
    return false;
  }
  if (!entity.contains("id") || !entity.at("id").is_string()) {
    error.message = "missing \"id\"";
    return false;
  }
  auto id = EntityId::parse(entity.at("id").get<std::string>());
  if (!id) {
    error.message = "empty \"id\"";
    return false;
  }

  out = EntityRecord{};
  out.id = *id;
  out.kind = kind_from_type(entity.value("type", ""), out.id);
  out.datatype = entity.value("datatype", "");

  const auto claims = entity.find("claims");
  if (claims == entity.end() || !claims->is_object()) return true;

  for (const auto& [prop_key, statements] : claims->items()) {
    auto prop = EntityId::parse(prop_key);
    if (!prop || !statements.is_array()) continue;

    for (const auto& stmt_json : statements) {
      if (!stmt_json.is_object()) continue;
      Statement stmt;
      stmt.subject = out.id;
      stmt.property = *prop;
      stmt.rank = decode_rank(stmt_json.value("rank", "normal"));

      if (const auto main = stmt_json.find("mainsnak"); main != stmt_json.end() && main->is_object()) {
        if (const auto p = main->find("property"); p != main->end() && p->is_string()) {
          if (auto mp = EntityId::parse(p->get<std::string>())) stmt.property = *mp;
        }
        stmt.value = decode_snak(*main);
      }

      if (const auto quals = stmt_json.find("qualifiers"); quals != stmt_json.end() && quals->is_object()) {
        // qualifiers-order restores the dump's qualifier sequence; the
        // qualifiers object itself is unordered.
        std::vector<std::string> order;
        if (const auto qo = stmt_json.find("qualifiers-order"); qo != stmt_json.end() && qo->is_array()) {
          for (const auto& k : *qo) {
            if (k.is_string()) order.push_back(k.get<std::string>());
          }
        }
        if (order.empty()) {
          for (const auto& [qk, unused] : quals->items()) order.push_back(qk);
        }
        for (const auto& qkey : order) {
          const auto group_it = quals->find(qkey);
          if (group_it == quals->end() || !group_it->is_array()) continue;
          auto qprop = EntityId::parse(qkey);
          if (!qprop) continue;
          QualifierGroup group;
          group.property = *qprop;
          for (const auto& snak : *group_it) {
            if (snak.is_object()) group.values.push_back(decode_snak(snak));
          }
          if (!group.values.empty()) stmt.qualifiers.push_back(std::move(group));
        }
      }

      out.statements.push_back(std::move(stmt));
    }
  }
  return true;
}

}  // namespace wdqual
