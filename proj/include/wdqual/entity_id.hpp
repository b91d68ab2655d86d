// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace wdqual {

enum class EntityKind { Item, Property, Lexeme, Other };

// Identifier of a Wikidata entity ("Q42", "P26", "L301993", ...).
// The raw text form is preserved so that parse/str round-trips are
// byte-identical even for unusual inputs; kind and numeric id are
// derived from the prefix letter.
class EntityId {
 public:
  EntityId() = default;

  static EntityId item(std::uint64_t n) { return EntityId(EntityKind::Item, n, "Q" + std::to_string(n)); }
  static EntityId property(std::uint64_t n) { return EntityId(EntityKind::Property, n, "P" + std::to_string(n)); }
  static EntityId lexeme(std::uint64_t n) { return EntityId(EntityKind::Lexeme, n, "L" + std::to_string(n)); }

  // Accepts any non-empty token; unknown prefixes yield kind Other with
  // the raw text kept verbatim. Returns nullopt only for empty input.
  static std::optional<EntityId> parse(std::string_view raw);

  EntityKind kind() const { return kind_; }
  std::uint64_t numeric_id() const { return num_; }
  const std::string& str() const { return raw_; }
  bool empty() const { return raw_.empty(); }

  friend bool operator==(const EntityId& a, const EntityId& b) { return a.raw_ == b.raw_; }
  friend bool operator!=(const EntityId& a, const EntityId& b) { return !(a == b); }
  friend bool operator<(const EntityId& a, const EntityId& b) {
    if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.raw_ < b.raw_;
  }

 private:
  EntityId(EntityKind k, std::uint64_t n, std::string raw) : kind_(k), num_(n), raw_(std::move(raw)) {}

  EntityKind kind_ = EntityKind::Other;
  std::uint64_t num_ = 0;
  std::string raw_;
};

// Properties are the keys of every frequency dictionary; they are always
// "P<n>", so tables use the bare numeric id.
using PropertyId = std::uint32_t;

std::string property_key(PropertyId id);                      // 580 -> "P580"
std::optional<PropertyId> parse_property_key(std::string_view key);  // "P580" -> 580

const char* entity_kind_name(EntityKind kind);

}  // namespace wdqual

template <>
struct std::hash<wdqual::EntityId> {
  std::size_t operator()(const wdqual::EntityId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
