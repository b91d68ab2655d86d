// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wdqual/entity_id.hpp"
#include "wdqual/scores.hpp"

namespace wdqual {

enum class TopCategory { Context, EpistemicUncertainty, Structural, Additional };

enum class LeafCategory {
  // Context
  Temporal,
  Spatial,
  SubjectModifier,
  // Epistemic/Uncertainty
  Epistemic,
  UncertaintyQuantification,
  // Structural
  Metamodeling,
  StructuredValueField,
  // Additional
  Sequence,
  Provenance,
  Causality,
  ObjectSubjectStatementRelation,
  SubPropertyOrValue,
  ExternalObjectDescription,
  OtherAdditional,
};

inline constexpr std::array<LeafCategory, 14> kAllLeafCategories = {
    LeafCategory::Temporal,       LeafCategory::Spatial,
    LeafCategory::SubjectModifier, LeafCategory::Epistemic,
    LeafCategory::UncertaintyQuantification, LeafCategory::Metamodeling,
    LeafCategory::StructuredValueField, LeafCategory::Sequence,
    LeafCategory::Provenance,     LeafCategory::Causality,
    LeafCategory::ObjectSubjectStatementRelation, LeafCategory::SubPropertyOrValue,
    LeafCategory::ExternalObjectDescription, LeafCategory::OtherAdditional,
};

// A leaf position in the category tree, serialized as "Top/Leaf"
// (e.g. "Context/Temporal"). The top is implied by the leaf.
struct CategoryPath {
  LeafCategory leaf = LeafCategory::OtherAdditional;

  TopCategory top() const;
  std::string str() const;
  static std::optional<CategoryPath> parse(const std::string& text);

  friend bool operator==(const CategoryPath& a, const CategoryPath& b) { return a.leaf == b.leaf; }
  friend bool operator<(const CategoryPath& a, const CategoryPath& b) { return a.leaf < b.leaf; }
};

// Curated qualifier -> category assignments. Each qualifier maps to
// exactly one leaf; qualifiers whose use straddles categories keep a
// note explaining the primary choice.
struct TaxonomyAssignment {
  CategoryPath category;
  std::string note;
};

class TaxonomyRegistry {
 public:
  void assign(PropertyId qualifier, CategoryPath category, std::string note = "");
  std::optional<CategoryPath> category_of(PropertyId qualifier) const;
  const std::map<PropertyId, TaxonomyAssignment>& assignments() const { return assignments_; }
  std::size_t size() const { return assignments_.size(); }

 private:
  std::map<PropertyId, TaxonomyAssignment> assignments_;
};

// Loads a `qualifier_id,category,note` CSV (header required). Unknown
// category strings and duplicate qualifier rows are errors carrying the
// row number.
TaxonomyRegistry load_classification(const std::filesystem::path& file);
TaxonomyRegistry load_classification_text(const std::string& text, const std::string& name = "<text>");

struct CategoryReportRow {
  CategoryPath category;
  Count qualifier_count = 0;
  Count frequency_sum = 0;
  double average_diversity = 0.0;  // mean diversity_proportional
};

struct CategoryReport {
  Count top_k = 0;
  std::vector<CategoryReportRow> rows;          // leaves in enum order, populated only
  std::vector<PropertyId> unassigned;           // top-k qualifiers missing from the registry
};

// Aggregates the top-k scores per leaf. Unassigned qualifiers are
// listed, never fatal.
CategoryReport category_report(const TaxonomyRegistry& reg, const std::vector<DiversityScore>& scores,
                               Count k);

std::string category_report_json(const CategoryReport& report);
std::string category_report_csv(const CategoryReport& report);

enum class ViolationKind { UnassignedTopQualifier, AssignmentNotInScores, MissingAmbiguityNote };

struct RegistryViolation {
  ViolationKind kind;
  PropertyId qualifier = 0;
  std::string message;
};

// Data-quality gate for the curated file: top-k coverage, dangling
// assignments, and missing notes on qualifiers known to be ambiguous
// (defaults: country P17, publisher P123, point in time P585).
std::vector<RegistryViolation> validate_registry(const TaxonomyRegistry& reg,
                                                 const std::vector<DiversityScore>& scores, Count k,
                                                 const std::set<PropertyId>& ambiguous_qualifiers = {17, 123, 585});

const char* top_category_name(TopCategory top);
const char* leaf_category_name(LeafCategory leaf);

}  // namespace wdqual
