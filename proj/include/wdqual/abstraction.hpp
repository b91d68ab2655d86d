// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdqual/statement.hpp"
#include "wdqual/taxonomy.hpp"
#include "wdqual/temporal.hpp"

namespace wdqual {

// Causes and effects attached to a statement, deduplicated and
// order-preserving per field.
struct CausalityValue {
  std::vector<EntityId> has_cause;
  std::vector<EntityId> end_cause;
  std::vector<EntityId> effects;

  bool empty() const { return has_cause.empty() && end_cause.empty() && effects.empty(); }
};

bool operator==(const CausalityValue& a, const CausalityValue& b);

// Fieldwise deduplicated concatenation, c1's entries first. Commutative
// and associative up to order; the empty value is the identity.
CausalityValue combine_causality(const CausalityValue& c1, const CausalityValue& c2);

using QualifierValuePair = std::pair<EntityId, SnakValue>;

// A statement's qualifiers partitioned by taxonomy category, plus the
// decoded typed values for the categories that have an algebra.
// Qualifiers absent from the registry land in the unclassified bucket;
// every pair appears in exactly one place.
struct CategoryValues {
  std::map<CategoryPath, std::vector<QualifierValuePair>> by_category;
  std::vector<QualifierValuePair> unclassified;

  TemporalContext temporal;            // Unspecified when no temporal qualifiers
  CausalityValue causality;
  // set when the temporal qualifiers were contradictory; temporal stays
  // Unspecified in that case
  std::optional<std::string> temporal_error;

  std::size_t total_pairs() const;
};

CategoryValues project_statement(const Statement& stmt, const TaxonomyRegistry& reg);

std::string category_values_json(const CategoryValues& values);
std::string causality_json(const CausalityValue& value);

}  // namespace wdqual
