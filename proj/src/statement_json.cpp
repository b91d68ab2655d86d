// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/statement_json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wdqual {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& name, const std::string& what) {
  throw std::runtime_error(name + ": " + what);
}

EntityId parse_id(const json& j, const std::string& name, const char* field) {
  if (!j.is_string()) fail(name, std::string(field) + " must be an entity id string");
  auto id = EntityId::parse(j.get<std::string>());
  if (!id) fail(name, std::string("bad ") + field);
  return *id;
}

SnakValue parse_value(const json& v, const std::string& name) {
  if (!v.is_object()) fail(name, "value must be an object with a \"type\"");
  const std::string type = v.value("type", "");
  if (type == "entity") return SnakValue::entity_ref(parse_id(v.at("id"), name, "value id"));
  if (type == "time") {
    auto t = parse_dump_time(v.at("time").get<std::string>(), v.value("precision", kPrecisionDay),
                             v.value("calendar", ""));
    if (!t) fail(name, "bad time value '" + v.at("time").get<std::string>() + "'");
    return SnakValue::time(*t);
  }
  if (type == "quantity") {
    QuantityValue q;
    const auto& amount = v.at("amount");
    q.amount = amount.is_string() ? amount.get<std::string>() : amount.dump();
    if (v.contains("unit")) q.unit = parse_id(v.at("unit"), name, "quantity unit");
    return SnakValue::quantity(std::move(q));
  }
  if (type == "string") return SnakValue::string(v.at("value").get<std::string>());
  if (type == "url") return SnakValue::url(v.at("value").get<std::string>());
  if (type == "external_id") return SnakValue::external_id(v.at("value").get<std::string>());
  if (type == "monolingual_text") return SnakValue::monolingual(v.at("value").get<std::string>());
  if (type == "coordinate") return SnakValue::coordinate(v.value("value", ""));
  if (type == "novalue") return SnakValue::no_value();
  if (type == "somevalue") return SnakValue::some_value();
  fail(name, "unknown value type '" + type + "'");
}

}  // namespace

Statement parse_statement_json_text(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(name, e.what());
  }
  if (!j.is_object()) fail(name, "statement must be a JSON object");

  Statement stmt;
  stmt.subject = parse_id(j.at("subject"), name, "subject");
  stmt.property = parse_id(j.at("property"), name, "property");
  if (j.contains("value")) stmt.value = parse_value(j.at("value"), name);

  const std::string rank = j.value("rank", "normal");
  if (rank == "preferred") {
    stmt.rank = StatementRank::Preferred;
  } else if (rank == "deprecated") {
    stmt.rank = StatementRank::Deprecated;
  } else if (rank != "normal") {
    fail(name, "unknown rank '" + rank + "'");
  }

  if (j.contains("qualifiers")) {
    if (!j.at("qualifiers").is_array()) fail(name, "qualifiers must be an array");
    for (const auto& q : j.at("qualifiers")) {
      EntityId property = parse_id(q.at("property"), name, "qualifier property");
      SnakValue value = parse_value(q.at("value"), name);
      // adjacent entries for the same property collapse into one group,
      // mirroring the dump's qualifier multimap
      if (!stmt.qualifiers.empty() && stmt.qualifiers.back().property == property) {
        stmt.qualifiers.back().values.push_back(std::move(value));
      } else {
        stmt.qualifiers.push_back(QualifierGroup{std::move(property), {std::move(value)}});
      }
    }
  }
  return stmt;
}

Statement load_statement_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_statement_json_text(buf.str(), file.string());
}

}  // namespace wdqual
