// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "wdqual/entity_id.hpp"
#include "wdqual/statement.hpp"

namespace wdqual {

enum class ScopeAllowance { AsMainValue, AsQualifier, AsReference };

// Per-property metadata harvested from property entities in the dump.
struct PropertyMeta {
  EntityId id;
  std::string datatype;
  // Absent means the property carries no scope constraint and may be
  // used anywhere.
  std::optional<std::set<ScopeAllowance>> scope_allowances;
  bool is_example_property = false;
};

// The entity/property ids that drive the two admissibility rules.
// Defaults follow current Wikidata conventions but everything is data,
// not code: a deployment against a differently-configured Wikibase can
// override any of it from JSON.
struct AdmissibilityConfig {
  std::set<EntityId> example_properties;
  EntityId scope_constraint_property;   // claims carrying constraints (P2302)
  EntityId scope_constraint_item;       // the scope-constraint type item (Q53869507)
  EntityId scope_qualifier_property;    // qualifier listing allowed scopes (P5314)
  std::map<EntityId, ScopeAllowance> scope_value_map;  // scope item -> allowance
  bool include_deprecated_rank = true;

  static AdmissibilityConfig defaults();
  static AdmissibilityConfig load(const std::filesystem::path& file);
  static AdmissibilityConfig from_json_text(const std::string& text);
  std::string to_json_text() const;
};

enum class QualifierAdmissibility { Allowed, DisallowedByScope };

// A statement is an example ("property example") statement iff its main
// property is one of the configured example properties. Such statements
// are meta-statements and are excluded from every count.
bool is_example_statement(const Statement& stmt, const AdmissibilityConfig& cfg);

// DisallowedByScope iff the property has a scope constraint that does
// not allow qualifier use.
QualifierAdmissibility qualifier_admissibility(const PropertyMeta& meta);

const char* scope_allowance_name(ScopeAllowance s);
std::optional<ScopeAllowance> parse_scope_allowance(const std::string& name);

}  // namespace wdqual
