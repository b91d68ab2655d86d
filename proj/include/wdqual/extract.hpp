// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <filesystem>
#include <functional>

#include "wdqual/dump_reader.hpp"
#include "wdqual/frequency_tables.hpp"

namespace wdqual {

// Pass 1: harvest PropertyMeta from every property entity. Scope
// allowances are decoded from the property's scope-constraint statements
// per the config; constraint statements with no decodable scope value
// are ignored and counted as unknown shapes.
void collect_property_meta(const EntityRecord& entity, const AdmissibilityConfig& cfg, PropertyCatalog& catalog);

struct CatalogResult {
  PropertyCatalog catalog;
  StreamStats stream;
};

CatalogResult build_catalog(const std::filesystem::path& dump, Compression compression,
                            const AdmissibilityConfig& cfg);

// Pass 2 core: fold one entity's statements into the tables. Example
// statements are excluded from all counts; scope-disallowed qualifier
// occurrences are excluded from q_freq / p_q_freq / pair totals but
// recorded in properties_seen_as_qualifier.
void accumulate_entity(const EntityRecord& entity, const PropertyCatalog& catalog,
                       const AdmissibilityConfig& cfg, FrequencyTables& tables);

template <typename EntitySequence>
FrequencyTables extract_frequency_tables(EntitySequence& entities, const PropertyCatalog& catalog,
                                         const AdmissibilityConfig& cfg) {
  FrequencyTables tables;
  while (auto entity = entities.next()) accumulate_entity(*entity, catalog, cfg, tables);
  return tables;
}

struct ExtractResult {
  FrequencyTables tables;
  StreamStats stream;
};

// Map-reduce over dump lines: one reader, `shards` independent workers
// each building a local table, folded with merge_tables. The result is
// independent of the shard count (integer counts, pointwise merge).
ExtractResult extract_from_dump(const std::filesystem::path& dump, Compression compression,
                                const PropertyCatalog& catalog, const AdmissibilityConfig& cfg,
                                int shards);

}  // namespace wdqual
