// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/admissibility.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wdqual {

namespace {

EntityId require_entity(const std::string& raw, const char* field) {
  auto id = EntityId::parse(raw);
  if (!id) throw std::runtime_error(std::string("admissibility config: empty id for ") + field);
  return *id;
}

}  // namespace

AdmissibilityConfig AdmissibilityConfig::defaults() {
  AdmissibilityConfig cfg;
  for (auto n : {1855, 5977, 6685, 2271, 5192, 5193}) {
    cfg.example_properties.insert(EntityId::property(static_cast<std::uint64_t>(n)));
  }
  cfg.scope_constraint_property = EntityId::property(2302);
  cfg.scope_constraint_item = EntityId::item(53869507);
  cfg.scope_qualifier_property = EntityId::property(5314);
  cfg.scope_value_map = {
      {EntityId::item(54828448), ScopeAllowance::AsMainValue},
      {EntityId::item(54828449), ScopeAllowance::AsQualifier},
      {EntityId::item(54828450), ScopeAllowance::AsReference},
  };
  cfg.include_deprecated_rank = true;
  return cfg;
}

AdmissibilityConfig AdmissibilityConfig::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("admissibility config: ") + e.what());
  }

  AdmissibilityConfig cfg;
  for (const auto& p : j.at("example_properties")) {
    cfg.example_properties.insert(require_entity(p.get<std::string>(), "example_properties"));
  }
  if (cfg.example_properties.empty()) {
    throw std::runtime_error("admissibility config: example_properties must be non-empty");
  }
  cfg.scope_constraint_property =
      require_entity(j.at("scope_constraint_property").get<std::string>(), "scope_constraint_property");
  cfg.scope_constraint_item =
      require_entity(j.at("scope_constraint_item").get<std::string>(), "scope_constraint_item");
  cfg.scope_qualifier_property =
      require_entity(j.at("scope_qualifier_property").get<std::string>(), "scope_qualifier_property");
  for (const auto& [item, name] : j.at("scope_values").items()) {
    auto allowance = parse_scope_allowance(name.get<std::string>());
    if (!allowance) {
      throw std::runtime_error("admissibility config: unknown scope value '" + name.get<std::string>() + "'");
    }
    cfg.scope_value_map.emplace(require_entity(item, "scope_values"), *allowance);
  }
  if (cfg.scope_value_map.empty()) {
    throw std::runtime_error("admissibility config: scope_values must be non-empty");
  }
  cfg.include_deprecated_rank = j.value("include_deprecated_rank", true);
  return cfg;
}

AdmissibilityConfig AdmissibilityConfig::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open config file: " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

std::string AdmissibilityConfig::to_json_text() const {
  nlohmann::json j;
  auto& ex = j["example_properties"] = nlohmann::json::array();
  for (const auto& p : example_properties) ex.push_back(p.str());
  j["scope_constraint_property"] = scope_constraint_property.str();
  j["scope_constraint_item"] = scope_constraint_item.str();
  j["scope_qualifier_property"] = scope_qualifier_property.str();
  auto& sv = j["scope_values"] = nlohmann::json::object();
  for (const auto& [item, allowance] : scope_value_map) sv[item.str()] = scope_allowance_name(allowance);
  j["include_deprecated_rank"] = include_deprecated_rank;
  return j.dump(2) + "\n";
}

bool is_example_statement(const Statement& stmt, const AdmissibilityConfig& cfg) {
  return cfg.example_properties.count(stmt.property) > 0;
}

QualifierAdmissibility qualifier_admissibility(const PropertyMeta& meta) {
  if (meta.scope_allowances && meta.scope_allowances->count(ScopeAllowance::AsQualifier) == 0) {
    return QualifierAdmissibility::DisallowedByScope;
  }
  return QualifierAdmissibility::Allowed;
}

const char* scope_allowance_name(ScopeAllowance s) {
  switch (s) {
    case ScopeAllowance::AsMainValue: return "main_value";
    case ScopeAllowance::AsQualifier: return "qualifier";
    case ScopeAllowance::AsReference: return "reference";
  }
  return "main_value";
}

std::optional<ScopeAllowance> parse_scope_allowance(const std::string& name) {
  if (name == "main_value") return ScopeAllowance::AsMainValue;
  if (name == "qualifier") return ScopeAllowance::AsQualifier;
  if (name == "reference") return ScopeAllowance::AsReference;
  return std::nullopt;
}

}  // namespace wdqual
