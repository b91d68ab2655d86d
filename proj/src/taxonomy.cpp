// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/taxonomy.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "wdqual/csv.hpp"

namespace wdqual {

TopCategory CategoryPath::top() const {
  switch (leaf) {
    case LeafCategory::Temporal:
    case LeafCategory::Spatial:
    case LeafCategory::SubjectModifier:
      return TopCategory::Context;
    case LeafCategory::Epistemic:
    case LeafCategory::UncertaintyQuantification:
      return TopCategory::EpistemicUncertainty;
    case LeafCategory::Metamodeling:
    case LeafCategory::StructuredValueField:
      return TopCategory::Structural;
    default:
      return TopCategory::Additional;
  }
}

const char* top_category_name(TopCategory top) {
  switch (top) {
    case TopCategory::Context: return "Context";
    case TopCategory::EpistemicUncertainty: return "EpistemicUncertainty";
    case TopCategory::Structural: return "Structural";
    case TopCategory::Additional: return "Additional";
  }
  return "Additional";
}

const char* leaf_category_name(LeafCategory leaf) {
  switch (leaf) {
    case LeafCategory::Temporal: return "Temporal";
    case LeafCategory::Spatial: return "Spatial";
    case LeafCategory::SubjectModifier: return "SubjectModifier";
    case LeafCategory::Epistemic: return "Epistemic";
    case LeafCategory::UncertaintyQuantification: return "UncertaintyQuantification";
    case LeafCategory::Metamodeling: return "Metamodeling";
    case LeafCategory::StructuredValueField: return "StructuredValueField";
    case LeafCategory::Sequence: return "Sequence";
    case LeafCategory::Provenance: return "Provenance";
    case LeafCategory::Causality: return "Causality";
    case LeafCategory::ObjectSubjectStatementRelation: return "ObjectSubjectStatementRelation";
    case LeafCategory::SubPropertyOrValue: return "SubPropertyOrValue";
    case LeafCategory::ExternalObjectDescription: return "ExternalObjectDescription";
    case LeafCategory::OtherAdditional: return "OtherAdditional";
  }
  return "OtherAdditional";
}

std::string CategoryPath::str() const {
  return std::string(top_category_name(top())) + "/" + leaf_category_name(leaf);
}

std::optional<CategoryPath> CategoryPath::parse(const std::string& text) {
  for (LeafCategory leaf : kAllLeafCategories) {
    CategoryPath path{leaf};
    if (path.str() == text) return path;
  }
  return std::nullopt;
}

void TaxonomyRegistry::assign(PropertyId qualifier, CategoryPath category, std::string note) {
  assignments_[qualifier] = TaxonomyAssignment{category, std::move(note)};
}

std::optional<CategoryPath> TaxonomyRegistry::category_of(PropertyId qualifier) const {
  auto it = assignments_.find(qualifier);
  if (it == assignments_.end()) return std::nullopt;
  return it->second.category;
}

namespace {

TaxonomyRegistry load_classification_reader(CsvReader& reader) {
  auto header = reader.next_row();
  if (!header || header->empty() || (*header)[0] != "qualifier_id") {
    throw std::runtime_error(reader.name() + ": expected header 'qualifier_id,category,note'");
  }

  TaxonomyRegistry registry;
  while (auto row = reader.next_row()) {
    if (row->size() == 1 && (*row)[0].empty()) continue;  // blank line
    const auto row_no = reader.row_number();
    if (row->size() < 2) {
      throw std::runtime_error(reader.name() + ": row " + std::to_string(row_no) +
                               ": expected qualifier_id,category[,note]");
    }
    auto qualifier = parse_property_key((*row)[0]);
    if (!qualifier) {
      throw std::runtime_error(reader.name() + ": row " + std::to_string(row_no) +
                               ": bad qualifier id '" + (*row)[0] + "'");
    }
    auto category = CategoryPath::parse((*row)[1]);
    if (!category) {
      throw std::runtime_error(reader.name() + ": row " + std::to_string(row_no) +
                               ": unknown category '" + (*row)[1] + "'");
    }
    if (registry.category_of(*qualifier)) {
      throw std::runtime_error(reader.name() + ": row " + std::to_string(row_no) +
                               ": duplicate qualifier " + (*row)[0]);
    }
    registry.assign(*qualifier, *category, row->size() > 2 ? (*row)[2] : "");
  }
  return registry;
}

}  // namespace

TaxonomyRegistry load_classification(const std::filesystem::path& file) {
  CsvReader reader(file);
  return load_classification_reader(reader);
}

TaxonomyRegistry load_classification_text(const std::string& text, const std::string& name) {
  CsvReader reader(std::make_unique<std::istringstream>(text), name);
  return load_classification_reader(reader);
}

CategoryReport category_report(const TaxonomyRegistry& reg, const std::vector<DiversityScore>& scores,
                               Count k) {
  if (k > scores.size()) throw std::invalid_argument("report: k exceeds score count");

  CategoryReport report;
  report.top_k = k;

  std::map<LeafCategory, CategoryReportRow> rows;
  std::map<LeafCategory, double> diversity_sums;

  for (Count i = 0; i < k; ++i) {
    const DiversityScore& s = scores[i];
    auto category = reg.category_of(s.qualifier);
    if (!category) {
      report.unassigned.push_back(s.qualifier);
      continue;
    }
    auto& row = rows[category->leaf];
    row.category = *category;
    ++row.qualifier_count;
    row.frequency_sum += s.frequency;
    diversity_sums[category->leaf] += s.diversity_proportional;
  }

  for (LeafCategory leaf : kAllLeafCategories) {
    auto it = rows.find(leaf);
    if (it == rows.end()) continue;
    it->second.average_diversity =
        diversity_sums[leaf] / static_cast<double>(it->second.qualifier_count);
    report.rows.push_back(it->second);
  }
  return report;
}

std::string category_report_json(const CategoryReport& report) {
  nlohmann::json j;
  j["top_k"] = report.top_k;
  auto& rows = j["categories"] = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"category", row.category.str()},
                    {"qualifier_count", row.qualifier_count},
                    {"frequency_sum", row.frequency_sum},
                    {"average_diversity", row.average_diversity}});
  }
  auto& un = j["unassigned"] = nlohmann::json::array();
  for (PropertyId q : report.unassigned) un.push_back(property_key(q));
  return j.dump(1) + "\n";
}

std::string category_report_csv(const CategoryReport& report) {
  std::string out = "category,qualifier_count,frequency_sum,average_diversity\n";
  for (const auto& row : report.rows) {
    char avg[64];
    std::snprintf(avg, sizeof(avg), "%.6f", row.average_diversity);
    out += csv_escape(row.category.str()) + "," + std::to_string(row.qualifier_count) + "," +
           std::to_string(row.frequency_sum) + "," + avg + "\n";
  }
  return out;
}

std::vector<RegistryViolation> validate_registry(const TaxonomyRegistry& reg,
                                                 const std::vector<DiversityScore>& scores, Count k,
                                                 const std::set<PropertyId>& ambiguous_qualifiers) {
  std::vector<RegistryViolation> violations;
  if (k > scores.size()) k = scores.size();

  std::set<PropertyId> scored;
  for (const auto& s : scores) scored.insert(s.qualifier);

  for (Count i = 0; i < k; ++i) {
    PropertyId q = scores[i].qualifier;
    if (!reg.category_of(q)) {
      violations.push_back({ViolationKind::UnassignedTopQualifier, q,
                            property_key(q) + " ranks " + std::to_string(i + 1) +
                                " but has no category assignment"});
    }
  }

  for (const auto& [q, assignment] : reg.assignments()) {
    if (!scored.count(q)) {
      violations.push_back({ViolationKind::AssignmentNotInScores, q,
                            property_key(q) + " is classified but absent from the score table"});
    }
    if (ambiguous_qualifiers.count(q) && assignment.note.empty()) {
      violations.push_back({ViolationKind::MissingAmbiguityNote, q,
                            property_key(q) + " is ambiguous across categories and needs a note"});
    }
  }
  return violations;
}

}  // namespace wdqual
