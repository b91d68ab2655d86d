// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/frequency_tables.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace wdqual {

namespace {

using nlohmann::json;

void add_counts(std::map<PropertyId, Count>& into, const std::map<PropertyId, Count>& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

void add_counts(std::map<std::string, Count>& into, const std::map<std::string, Count>& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

json counts_to_json(const std::map<PropertyId, Count>& counts) {
  json j = json::object();
  for (const auto& [id, n] : counts) j[property_key(id)] = n;
  return j;
}

std::map<PropertyId, Count> counts_from_json(const json& j, const std::string& what) {
  std::map<PropertyId, Count> out;
  for (const auto& [key, value] : j.items()) {
    auto id = parse_property_key(key);
    if (!id) throw std::runtime_error(what + ": bad property key '" + key + "'");
    out[*id] = value.get<Count>();
  }
  return out;
}

json load_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + file.string());
}

}  // namespace

FrequencyTables merge_tables(const FrequencyTables& a, const FrequencyTables& b) {
  FrequencyTables out = a;
  add_counts(out.p_freq, b.p_freq);
  add_counts(out.q_freq, b.q_freq);
  add_counts(out.q_pair_freq, b.q_pair_freq);
  for (const auto& [q, per_p] : b.p_q_freq) add_counts(out.p_q_freq[q], per_p);
  out.total_statements += b.total_statements;
  out.qualified_statements += b.qualified_statements;
  out.total_qualifications += b.total_qualifications;
  out.example_statements_excluded += b.example_statements_excluded;
  out.deprecated_statements_excluded += b.deprecated_statements_excluded;
  out.entities += b.entities;
  add_counts(out.entities_by_kind, b.entities_by_kind);
  add_counts(out.statements_by_kind, b.statements_by_kind);
  out.properties_seen_as_qualifier.insert(b.properties_seen_as_qualifier.begin(),
                                          b.properties_seen_as_qualifier.end());
  return out;
}

std::vector<std::string> check_table_consistency(const FrequencyTables& t) {
  std::vector<std::string> violations;

  for (const auto& [q, per_p] : t.p_q_freq) {
    Count sum = 0;
    for (const auto& [p, n] : per_p) {
      sum += n;
      auto gf = t.p_freq.find(p);
      if (gf == t.p_freq.end() || n > gf->second) {
        violations.push_back("F(" + property_key(p) + "," + property_key(q) + ") exceeds GF(" +
                             property_key(p) + ")");
      }
    }
    auto fq = t.q_freq.find(q);
    if (fq == t.q_freq.end() || fq->second != sum) {
      violations.push_back("sum_p F(p," + property_key(q) + ") != F(" + property_key(q) + ")");
    }
  }
  for (const auto& [q, n] : t.q_freq) {
    if (!t.p_q_freq.count(q)) violations.push_back(property_key(q) + " in q_freq but not in p_q_freq");
    auto pairs = t.q_pair_freq.find(q);
    if (pairs == t.q_pair_freq.end() || pairs->second < n) {
      violations.push_back("pair count below F(q) for " + property_key(q));
    }
  }
  if (t.qualified_statements > t.total_statements) {
    violations.push_back("qualified_statements exceeds total_statements");
  }
  if (t.total_qualifications < t.qualified_statements) {
    violations.push_back("total_qualifications below qualified_statements");
  }
  return violations;
}

void PropertyCatalog::insert(PropertyMeta meta) {
  EntityId id = meta.id;
  entries_[id] = std::move(meta);
}

PropertyMeta PropertyCatalog::lookup(const EntityId& property) const {
  auto it = entries_.find(property);
  if (it != entries_.end()) return it->second;
  PropertyMeta meta;
  meta.id = property;
  return meta;  // unconstrained default
}

bool PropertyCatalog::contains(const EntityId& property) const { return entries_.count(property) > 0; }

void save_tables(const FrequencyTables& t, const IngestStatsExtra& stats, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);

  write_text_file(dir / "p-freq.json", counts_to_json(t.p_freq).dump(1) + "\n");
  write_text_file(dir / "q-freq.json", counts_to_json(t.q_freq).dump(1) + "\n");
  write_text_file(dir / "q-pair-freq.json", counts_to_json(t.q_pair_freq).dump(1) + "\n");

  json pq = json::object();
  for (const auto& [q, per_p] : t.p_q_freq) pq[property_key(q)] = counts_to_json(per_p);
  write_text_file(dir / "p-q-freq.json", pq.dump(1) + "\n");

  json s;
  s["entities"] = t.entities;
  s["entities_by_kind"] = t.entities_by_kind;
  s["total_statements"] = t.total_statements;
  s["statements_by_kind"] = t.statements_by_kind;
  s["qualified_statements"] = t.qualified_statements;
  s["total_qualifications"] = t.total_qualifications;
  s["example_statements_excluded"] = t.example_statements_excluded;
  s["deprecated_statements_excluded"] = t.deprecated_statements_excluded;
  json seen = json::array();
  for (PropertyId p : t.properties_seen_as_qualifier) seen.push_back(property_key(p));
  s["properties_seen_as_qualifier"] = seen;
  s["admissible_qualifiers"] = t.q_freq.size();
  s["lines"] = stats.lines;
  s["lines_skipped"] = stats.lines_skipped;
  s["parse_error_samples"] = stats.parse_error_samples;
  s["unknown_constraint_shapes"] = stats.unknown_constraint_shapes;
  s["catalog_properties"] = stats.catalog_properties;
  write_text_file(dir / "ingest-stats.json", s.dump(1) + "\n");
}

FrequencyTables load_tables(const std::filesystem::path& dir) {
  FrequencyTables t;
  t.p_freq = counts_from_json(load_json_file(dir / "p-freq.json"), "p-freq.json");
  t.q_freq = counts_from_json(load_json_file(dir / "q-freq.json"), "q-freq.json");

  const json pq = load_json_file(dir / "p-q-freq.json");
  for (const auto& [key, inner] : pq.items()) {
    auto q = parse_property_key(key);
    if (!q) throw std::runtime_error("p-q-freq.json: bad qualifier key '" + key + "'");
    t.p_q_freq[*q] = counts_from_json(inner, "p-q-freq.json[" + key + "]");
  }

  if (std::filesystem::exists(dir / "q-pair-freq.json")) {
    t.q_pair_freq = counts_from_json(load_json_file(dir / "q-pair-freq.json"), "q-pair-freq.json");
  }

  if (std::filesystem::exists(dir / "ingest-stats.json")) {
    const json s = load_json_file(dir / "ingest-stats.json");
    t.entities = s.value("entities", Count{0});
    t.total_statements = s.value("total_statements", Count{0});
    t.qualified_statements = s.value("qualified_statements", Count{0});
    t.total_qualifications = s.value("total_qualifications", Count{0});
    t.example_statements_excluded = s.value("example_statements_excluded", Count{0});
    t.deprecated_statements_excluded = s.value("deprecated_statements_excluded", Count{0});
    if (s.contains("entities_by_kind")) {
      t.entities_by_kind = s.at("entities_by_kind").get<std::map<std::string, Count>>();
    }
    if (s.contains("statements_by_kind")) {
      t.statements_by_kind = s.at("statements_by_kind").get<std::map<std::string, Count>>();
    }
    if (s.contains("properties_seen_as_qualifier")) {
      for (const auto& key : s.at("properties_seen_as_qualifier")) {
        if (auto p = parse_property_key(key.get<std::string>())) t.properties_seen_as_qualifier.insert(*p);
      }
    }
  }
  return t;
}

}  // namespace wdqual
