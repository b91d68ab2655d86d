// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/abstraction.hpp"

#include <algorithm>

#include <json.hpp>

namespace wdqual {

namespace {

// Causality roles. Causes of ceasing (end cause, cause of destruction,
// cause of death) feed end_cause; forward consequences feed effects.
enum class CausalRole { HasCause, EndCause, Effect };

std::optional<CausalRole> causal_role(PropertyId qualifier) {
  switch (qualifier) {
    case 828:   // has cause
    case 1478:  // has immediate cause
      return CausalRole::HasCause;
    case 1534:  // end cause
    case 770:   // cause of destruction
    case 509:   // cause of death
      return CausalRole::EndCause;
    case 1542:  // has effect
    case 1536:  // immediate cause of
      return CausalRole::Effect;
    default:
      return std::nullopt;
  }
}

void push_unique(std::vector<EntityId>& list, const EntityId& id) {
  if (std::find(list.begin(), list.end(), id) == list.end()) list.push_back(id);
}

}  // namespace

bool operator==(const CausalityValue& a, const CausalityValue& b) {
  return a.has_cause == b.has_cause && a.end_cause == b.end_cause && a.effects == b.effects;
}

CausalityValue combine_causality(const CausalityValue& c1, const CausalityValue& c2) {
  CausalityValue out;
  for (const auto* src : {&c1, &c2}) {
    for (const auto& id : src->has_cause) push_unique(out.has_cause, id);
    for (const auto& id : src->end_cause) push_unique(out.end_cause, id);
    for (const auto& id : src->effects) push_unique(out.effects, id);
  }
  return out;
}

std::size_t CategoryValues::total_pairs() const {
  std::size_t n = unclassified.size();
  for (const auto& [category, pairs] : by_category) n += pairs.size();
  return n;
}

CategoryValues project_statement(const Statement& stmt, const TaxonomyRegistry& reg) {
  CategoryValues out;

  std::vector<std::pair<PropertyId, SnakValue>> temporal_pairs;

  for (const auto& group : stmt.qualifiers) {
    std::optional<CategoryPath> category;
    PropertyId qnum = 0;
    if (group.property.kind() == EntityKind::Property) {
      qnum = static_cast<PropertyId>(group.property.numeric_id());
      category = reg.category_of(qnum);
    }
    for (const auto& value : group.values) {
      if (!category) {
        out.unclassified.emplace_back(group.property, value);
        continue;
      }
      out.by_category[*category].emplace_back(group.property, value);

      if (category->leaf == LeafCategory::Temporal) {
        temporal_pairs.emplace_back(qnum, value);
      } else if (category->leaf == LeafCategory::Causality && value.is_entity()) {
        if (auto role = causal_role(qnum)) {
          switch (*role) {
            case CausalRole::HasCause: push_unique(out.causality.has_cause, value.entity()); break;
            case CausalRole::EndCause: push_unique(out.causality.end_cause, value.entity()); break;
            case CausalRole::Effect: push_unique(out.causality.effects, value.entity()); break;
          }
        }
      }
    }
  }

  try {
    out.temporal = normalize_temporal(temporal_pairs);
  } catch (const TemporalError& e) {
    out.temporal = TemporalContext::unspecified();
    out.temporal_error = e.what();
  }
  return out;
}

namespace {

nlohmann::json causality_to_json(const CausalityValue& value) {
  auto ids_to_json = [](const std::vector<EntityId>& ids) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& id : ids) arr.push_back(id.str());
    return arr;
  };
  nlohmann::json j;
  j["has_cause"] = ids_to_json(value.has_cause);
  j["end_cause"] = ids_to_json(value.end_cause);
  j["effects"] = ids_to_json(value.effects);
  return j;
}

}  // namespace

std::string causality_json(const CausalityValue& value) {
  return causality_to_json(value).dump(1) + "\n";
}

std::string category_values_json(const CategoryValues& values) {
  nlohmann::json j = nlohmann::json::object();

  auto pairs_to_json = [](const std::vector<QualifierValuePair>& pairs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [property, value] : pairs) {
      arr.push_back({{"qualifier", property.str()},
                     {"value_kind", snak_kind_name(value.kind())},
                     {"value", value.describe()}});
    }
    return arr;
  };

  for (const auto& [category, pairs] : values.by_category) {
    j[category.str()] = pairs_to_json(pairs);
  }
  if (!values.unclassified.empty()) j["Unclassified"] = pairs_to_json(values.unclassified);

  nlohmann::json temporal;
  temporal["start"] = values.temporal.start.str();
  temporal["end"] = values.temporal.end.str();
  temporal["unspecified"] = values.temporal.is_unspecified();
  if (values.temporal_error) temporal["error"] = *values.temporal_error;
  j["temporal_context"] = temporal;

  j["causality"] = causality_to_json(values.causality);

  return j.dump(1) + "\n";
}

}  // namespace wdqual
