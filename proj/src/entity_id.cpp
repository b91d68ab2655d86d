// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/entity_id.hpp"

#include <cctype>

namespace wdqual {

std::optional<EntityId> EntityId::parse(std::string_view raw) {
  if (raw.empty()) return std::nullopt;

  EntityKind kind = EntityKind::Other;
  switch (raw.front()) {
    case 'Q': kind = EntityKind::Item; break;
    case 'P': kind = EntityKind::Property; break;
    case 'L': kind = EntityKind::Lexeme; break;
    default: break;
  }

  std::uint64_t num = 0;
  bool all_digits = raw.size() > 1;
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(raw[i]))) {
      all_digits = false;
      break;
    }
    num = num * 10 + static_cast<std::uint64_t>(raw[i] - '0');
  }
  if (!all_digits) {
    kind = EntityKind::Other;
    num = 0;
  }
  return EntityId(kind, num, std::string(raw));
}

std::string property_key(PropertyId id) { return "P" + std::to_string(id); }

std::optional<PropertyId> parse_property_key(std::string_view key) {
  auto id = EntityId::parse(key);
  if (!id || id->kind() != EntityKind::Property) return std::nullopt;
  return static_cast<PropertyId>(id->numeric_id());
}

const char* entity_kind_name(EntityKind kind) {
  switch (kind) {
    case EntityKind::Item: return "item";
    case EntityKind::Property: return "property";
    case EntityKind::Lexeme: return "lexeme";
    case EntityKind::Other: return "other";
  }
  return "other";
}

}  // namespace wdqual
