// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/snak.hpp"

namespace wdqual {

const char* snak_kind_name(SnakValue::Kind kind) {
  switch (kind) {
    case SnakValue::Kind::EntityRef: return "entity";
    case SnakValue::Kind::Time: return "time";
    case SnakValue::Kind::Quantity: return "quantity";
    case SnakValue::Kind::String: return "string";
    case SnakValue::Kind::Url: return "url";
    case SnakValue::Kind::ExternalId: return "external_id";
    case SnakValue::Kind::Coordinate: return "coordinate";
    case SnakValue::Kind::MonolingualText: return "monolingual_text";
    case SnakValue::Kind::NoValue: return "novalue";
    case SnakValue::Kind::SomeValue: return "somevalue";
    case SnakValue::Kind::Other: return "other";
  }
  return "other";
}

std::string SnakValue::describe() const {
  switch (kind_) {
    case Kind::EntityRef: return entity().str();
    case Kind::Time: return time_point().str();
    case Kind::Quantity: {
      const auto& q = quantity_value();
      return q.unit.empty() ? q.amount : q.amount + " " + q.unit.str();
    }
    case Kind::NoValue: return "(no value)";
    case Kind::SomeValue: return "(some value)";
    default: return text();
  }
}

}  // namespace wdqual
