// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <string>
#include <variant>

#include "wdqual/entity_id.hpp"
#include "wdqual/time_point.hpp"

namespace wdqual {

// Decimal amount plus optional unit entity, as in dump quantity values.
// The amount keeps its raw text form; callers that need arithmetic parse
// it on demand.
struct QuantityValue {
  std::string amount;
  EntityId unit;  // empty when the unit is "1" (dimensionless)
};

// The value side of a snak. The datatype tag determines the payload
// shape; no-value and some-value carry none.
class SnakValue {
 public:
  enum class Kind {
    EntityRef,
    Time,
    Quantity,
    String,
    Url,
    ExternalId,
    Coordinate,
    MonolingualText,
    NoValue,
    SomeValue,
    Other,
  };

  SnakValue() : kind_(Kind::NoValue) {}

  static SnakValue entity_ref(EntityId id) { return SnakValue(Kind::EntityRef, std::move(id)); }
  static SnakValue time(TimePoint t) { return SnakValue(Kind::Time, std::move(t)); }
  static SnakValue quantity(QuantityValue q) { return SnakValue(Kind::Quantity, std::move(q)); }
  static SnakValue string(std::string s) { return SnakValue(Kind::String, std::move(s)); }
  static SnakValue url(std::string s) { return SnakValue(Kind::Url, std::move(s)); }
  static SnakValue external_id(std::string s) { return SnakValue(Kind::ExternalId, std::move(s)); }
  static SnakValue coordinate(std::string raw) { return SnakValue(Kind::Coordinate, std::move(raw)); }
  static SnakValue monolingual(std::string text) { return SnakValue(Kind::MonolingualText, std::move(text)); }
  static SnakValue no_value() { return SnakValue(Kind::NoValue, std::monostate{}); }
  static SnakValue some_value() { return SnakValue(Kind::SomeValue, std::monostate{}); }
  static SnakValue other(std::string raw) { return SnakValue(Kind::Other, std::move(raw)); }

  Kind kind() const { return kind_; }

  bool is_entity() const { return kind_ == Kind::EntityRef; }
  bool is_time() const { return kind_ == Kind::Time; }
  bool is_quantity() const { return kind_ == Kind::Quantity; }

  const EntityId& entity() const { return std::get<EntityId>(payload_); }
  const TimePoint& time_point() const { return std::get<TimePoint>(payload_); }
  const QuantityValue& quantity_value() const { return std::get<QuantityValue>(payload_); }
  // String, Url, ExternalId, Coordinate, MonolingualText and Other all
  // carry a text payload.
  const std::string& text() const { return std::get<std::string>(payload_); }

  std::string describe() const;

 private:
  using Payload = std::variant<std::monostate, EntityId, TimePoint, QuantityValue, std::string>;

  template <typename T>
  SnakValue(Kind k, T&& payload) : kind_(k), payload_(std::forward<T>(payload)) {}

  Kind kind_;
  Payload payload_;
};

const char* snak_kind_name(SnakValue::Kind kind);

}  // namespace wdqual
