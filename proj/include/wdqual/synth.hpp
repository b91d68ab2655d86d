// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wdqual/admissibility.hpp"
#include "wdqual/frequency_tables.hpp"

namespace wdqual {

// Deterministic synthetic dumps with exact ground truth. The real input
// is hundreds of gigabytes; these let the whole pipeline be verified at
// desk scale, with the expected tables computed by direct enumeration
// rather than through the ingest path.

struct SynthQualifierPlan {
  PropertyId qualifier = 0;
  unsigned values_per_statement = 1;
  std::optional<double> probability;   // Bernoulli attachment per statement
  std::optional<Count> exact_count;    // exactly this many of the plan's statements
};

struct SynthStatementPlan {
  PropertyId property = 0;
  Count count = 0;
  std::vector<SynthQualifierPlan> qualifiers;
};

struct SynthPropertyDef {
  PropertyId id = 0;
  std::string datatype = "wikibase-item";
  std::optional<std::set<ScopeAllowance>> scope;
};

struct SynthSpec {
  Count entities = 0;
  std::vector<SynthPropertyDef> property_defs;
  std::vector<SynthStatementPlan> statement_plan;
  Count example_statement_count = 0;
  std::uint64_t seed = 0;
  // main properties marking example statements; must match the
  // AdmissibilityConfig the dump will be ingested with
  std::set<EntityId> example_properties;

  static SynthSpec from_json_text(const std::string& text, const std::string& name = "<text>");
  static SynthSpec load(const std::filesystem::path& file);
};

struct SynthSpecError : std::runtime_error {
  explicit SynthSpecError(const std::string& what) : std::runtime_error(what) {}
};

struct SynthOutput {
  std::string dump_bytes;        // JSON-array-with-lines format, comma quirks included
  FrequencyTables ground_truth;
};

// Renders the dump and counts its exact tables alongside. Byte-identical
// for identical spec+seed. Throws SynthSpecError for unsatisfiable
// plans.
SynthOutput generate_dump(const SynthSpec& spec);

// Ground truth by direct enumeration of the planned statements, never
// touching the ingest path. For every valid spec,
// extract_frequency_tables(generate_dump(spec)) == oracle_tables(spec).
FrequencyTables oracle_tables(const SynthSpec& spec);

// Writes dump bytes, gzip-compressed when the path ends in ".gz".
void write_dump_file(const std::string& dump_bytes, const std::filesystem::path& path);

}  // namespace wdqual
