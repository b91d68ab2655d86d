// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <cstddef>
#include <vector>

#include "wdqual/entity_id.hpp"
#include "wdqual/snak.hpp"

namespace wdqual {

enum class StatementRank { Preferred, Normal, Deprecated };

// One qualifier property with its (possibly multiple) values. A group
// keeps the dump's value order; groups keep the dump's qualifier order.
struct QualifierGroup {
  EntityId property;
  std::vector<SnakValue> values;
};

// Subject-property-value plus qualifier snaks and rank. References are
// intentionally not modeled; nothing here consumes them.
struct Statement {
  EntityId subject;
  EntityId property;
  SnakValue value;
  std::vector<QualifierGroup> qualifiers;
  StatementRank rank = StatementRank::Normal;

  std::size_t qualifier_pair_count() const {
    std::size_t n = 0;
    for (const auto& g : qualifiers) n += g.values.size();
    return n;
  }
};

}  // namespace wdqual
