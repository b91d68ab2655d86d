// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "wdqual/admissibility.hpp"
#include "wdqual/entity_id.hpp"

namespace wdqual {

using Count = std::uint64_t;

// The three frequency dictionaries plus the global counters they are
// read together with:
//   p_freq    GF(p)   statements whose main property is p
//   q_freq    F(q)    statements carrying qualifier q at least once
//   p_q_freq  F(p,q)  statements with main property p carrying q
// All counts are over non-example statements; q_freq / p_q_freq cover
// admissible qualifiers only. q_pair_freq counts qualifier-value pairs
// per qualifier (a statement with q three times adds 3 here but 1 to
// F(q)) and feeds coverage computations.
struct FrequencyTables {
  std::map<PropertyId, Count> p_freq;
  std::map<PropertyId, Count> q_freq;
  std::map<PropertyId, std::map<PropertyId, Count>> p_q_freq;
  std::map<PropertyId, Count> q_pair_freq;

  Count total_statements = 0;
  Count qualified_statements = 0;     // >= 1 admissible qualifier
  Count total_qualifications = 0;     // admissible qualifier-value pairs
  Count example_statements_excluded = 0;
  Count deprecated_statements_excluded = 0;
  Count entities = 0;
  std::map<std::string, Count> entities_by_kind;
  std::map<std::string, Count> statements_by_kind;

  // every property seen in qualifier position, before scope filtering
  std::set<PropertyId> properties_seen_as_qualifier;

  bool operator==(const FrequencyTables& other) const = default;
};

// Pointwise sum; set union for properties_seen_as_qualifier. Associative
// and commutative, with the default-constructed table as identity.
FrequencyTables merge_tables(const FrequencyTables& a, const FrequencyTables& b);

// Structural self-consistency (sum_p F(p,q) == F(q), bound checks, ...).
// Returns human-readable violations; empty means consistent.
std::vector<std::string> check_table_consistency(const FrequencyTables& t);

// Per-property metadata with a default "unconstrained" answer for
// properties the dump never defined.
class PropertyCatalog {
 public:
  void insert(PropertyMeta meta);
  PropertyMeta lookup(const EntityId& property) const;
  bool contains(const EntityId& property) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<EntityId, PropertyMeta>& entries() const { return entries_; }

  Count unknown_constraint_shapes = 0;

 private:
  std::map<EntityId, PropertyMeta> entries_;
};

// File layout mirroring the analysis artifacts: p-freq.json, q-freq.json,
// p-q-freq.json, q-pair-freq.json and ingest-stats.json in one directory.
struct IngestStatsExtra {
  Count lines = 0;
  Count lines_skipped = 0;
  std::vector<std::string> parse_error_samples;
  Count unknown_constraint_shapes = 0;
  Count catalog_properties = 0;
};

void save_tables(const FrequencyTables& t, const IngestStatsExtra& stats, const std::filesystem::path& dir);
FrequencyTables load_tables(const std::filesystem::path& dir);

}  // namespace wdqual
