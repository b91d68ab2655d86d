// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/extract.hpp"

#include <condition_variable>
#include <deque>
#include <exception>
#include <mutex>
#include <thread>

namespace wdqual {

namespace {

// Prefilter for the catalog pass: property entities are a tiny fraction
// of a dump, so pass 1 only JSON-parses lines that could plausibly be
// one. A property line has a top-level "type":"property" (or, as a
// fallback for untyped records, an "id":"P..."); both probes are safe
// against the "entity-type":"property" spellings inside snaks because
// they require the quote before the key. False positives only cost a
// parse.
bool maybe_property_entity(std::string_view line) {
  static constexpr std::string_view kType = "\"type\"";
  std::size_t pos = 0;
  while ((pos = line.find(kType, pos)) != std::string_view::npos) {
    std::size_t i = pos + kType.size();
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i < line.size() && line[i] == ':') {
      ++i;
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      if (line.compare(i, 10, "\"property\"") == 0) return true;
    }
    pos += kType.size();
  }
  return line.find("\"id\":\"P") != std::string_view::npos ||
         line.find("\"id\": \"P") != std::string_view::npos;
}

template <typename T>
class BoundedQueue {
 public:
  explicit BoundedQueue(std::size_t cap) : cap_(cap) {}

  void push(T item) {
    std::unique_lock lock(mu_);
    not_full_.wait(lock, [&] { return items_.size() < cap_ || closed_; });
    if (closed_) return;
    items_.push_back(std::move(item));
    not_empty_.notify_one();
  }

  bool pop(T& out) {
    std::unique_lock lock(mu_);
    not_empty_.wait(lock, [&] { return !items_.empty() || closed_; });
    if (items_.empty()) return false;
    out = std::move(items_.front());
    items_.pop_front();
    not_full_.notify_one();
    return true;
  }

  void close() {
    std::lock_guard lock(mu_);
    closed_ = true;
    not_empty_.notify_all();
    not_full_.notify_all();
  }

 private:
  std::mutex mu_;
  std::condition_variable not_empty_, not_full_;
  std::deque<T> items_;
  std::size_t cap_;
  bool closed_ = false;
};

struct NumberedLine {
  std::string text;
  std::uint64_t number = 0;
};

void process_line(std::string_view raw, std::uint64_t line_number, const PropertyCatalog& catalog,
                  const AdmissibilityConfig& cfg, FrequencyTables& tables, StreamStats& stats) {
  std::string_view body;
  if (!frame_dump_line(raw, body)) return;
  ++stats.lines;
  EntityRecord record;
  EntityParseError error;
  if (!parse_entity_json(body, record, error)) {
    stats.note_error(line_number, error.message);
    return;
  }
  ++stats.entities;
  accumulate_entity(record, catalog, cfg, tables);
}

}  // namespace

void collect_property_meta(const EntityRecord& entity, const AdmissibilityConfig& cfg,
                           PropertyCatalog& catalog) {
  if (entity.kind != EntityKind::Property) return;

  PropertyMeta meta;
  meta.id = entity.id;
  meta.datatype = entity.datatype;
  meta.is_example_property = cfg.example_properties.count(entity.id) > 0;

  for (const auto& stmt : entity.statements) {
    if (stmt.property != cfg.scope_constraint_property) continue;
    if (!stmt.value.is_entity() || stmt.value.entity() != cfg.scope_constraint_item) continue;

    std::set<ScopeAllowance> decoded;
    for (const auto& group : stmt.qualifiers) {
      if (group.property != cfg.scope_qualifier_property) continue;
      for (const auto& value : group.values) {
        if (!value.is_entity()) continue;
        auto it = cfg.scope_value_map.find(value.entity());
        if (it != cfg.scope_value_map.end()) decoded.insert(it->second);
      }
    }
    if (decoded.empty()) {
      ++catalog.unknown_constraint_shapes;
      continue;
    }
    if (meta.scope_allowances) {
      meta.scope_allowances->insert(decoded.begin(), decoded.end());
    } else {
      meta.scope_allowances = std::move(decoded);
    }
  }

  catalog.insert(std::move(meta));
}

CatalogResult build_catalog(const std::filesystem::path& dump, Compression compression,
                            const AdmissibilityConfig& cfg) {
  CatalogResult result;
  LineReader lines(open_byte_source(dump, compression));
  while (auto raw = lines.next_line()) {
    std::string_view body;
    if (!frame_dump_line(*raw, body)) continue;
    ++result.stream.lines;
    if (!maybe_property_entity(body)) continue;
    EntityRecord record;
    EntityParseError error;
    if (!parse_entity_json(body, record, error)) {
      result.stream.note_error(lines.line_number(), error.message);
      continue;
    }
    ++result.stream.entities;
    collect_property_meta(record, cfg, result.catalog);
  }
  return result;
}

void accumulate_entity(const EntityRecord& entity, const PropertyCatalog& catalog,
                       const AdmissibilityConfig& cfg, FrequencyTables& tables) {
  ++tables.entities;
  ++tables.entities_by_kind[entity_kind_name(entity.kind)];

  for (const auto& stmt : entity.statements) {
    if (stmt.rank == StatementRank::Deprecated && !cfg.include_deprecated_rank) {
      ++tables.deprecated_statements_excluded;
      continue;
    }
    if (is_example_statement(stmt, cfg)) {
      ++tables.example_statements_excluded;
      continue;
    }
    if (stmt.property.kind() != EntityKind::Property) continue;
    const auto main_property = static_cast<PropertyId>(stmt.property.numeric_id());

    ++tables.total_statements;
    ++tables.statements_by_kind[entity_kind_name(entity.kind)];
    ++tables.p_freq[main_property];

    // Pair counts accumulate per qualifier first so that a statement
    // counts once in F(q)/F(p,q) however many values (or repeated
    // groups) it carries.
    std::map<PropertyId, Count> pairs_by_qualifier;
    for (const auto& group : stmt.qualifiers) {
      if (group.property.kind() != EntityKind::Property) continue;
      const auto q = static_cast<PropertyId>(group.property.numeric_id());
      tables.properties_seen_as_qualifier.insert(q);
      if (qualifier_admissibility(catalog.lookup(group.property)) != QualifierAdmissibility::Allowed) {
        continue;
      }
      pairs_by_qualifier[q] += group.values.size();
    }

    if (!pairs_by_qualifier.empty()) ++tables.qualified_statements;
    for (const auto& [q, pairs] : pairs_by_qualifier) {
      ++tables.q_freq[q];
      ++tables.p_q_freq[q][main_property];
      tables.q_pair_freq[q] += pairs;
      tables.total_qualifications += pairs;
    }
  }
}

ExtractResult extract_from_dump(const std::filesystem::path& dump, Compression compression,
                                const PropertyCatalog& catalog, const AdmissibilityConfig& cfg,
                                int shards) {
  ExtractResult result;

  if (shards <= 1) {
    LineReader lines(open_byte_source(dump, compression));
    while (auto raw = lines.next_line()) {
      process_line(*raw, lines.line_number(), catalog, cfg, result.tables, result.stream);
    }
    return result;
  }

  const std::size_t n = static_cast<std::size_t>(shards);
  constexpr std::size_t kBatch = 256;
  std::vector<std::unique_ptr<BoundedQueue<std::vector<NumberedLine>>>> queues;
  for (std::size_t i = 0; i < n; ++i) {
    queues.push_back(std::make_unique<BoundedQueue<std::vector<NumberedLine>>>(16));
  }

  std::vector<FrequencyTables> shard_tables(n);
  std::vector<StreamStats> shard_stats(n);
  std::vector<std::exception_ptr> worker_errors(n);

  std::vector<std::thread> workers;
  workers.reserve(n);
  for (std::size_t w = 0; w < n; ++w) {
    workers.emplace_back([&, w] {
      try {
        std::vector<NumberedLine> batch;
        while (queues[w]->pop(batch)) {
          for (const auto& line : batch) {
            process_line(line.text, line.number, catalog, cfg, shard_tables[w], shard_stats[w]);
          }
        }
      } catch (...) {
        worker_errors[w] = std::current_exception();
        queues[w]->close();
      }
    });
  }

  std::exception_ptr reader_error;
  try {
    LineReader lines(open_byte_source(dump, compression));
    std::vector<NumberedLine> batch;
    batch.reserve(kBatch);
    std::size_t next_worker = 0;
    while (auto raw = lines.next_line()) {
      batch.push_back(NumberedLine{std::string(*raw), lines.line_number()});
      if (batch.size() >= kBatch) {
        queues[next_worker]->push(std::move(batch));
        batch = {};
        batch.reserve(kBatch);
        next_worker = (next_worker + 1) % n;
      }
    }
    if (!batch.empty()) queues[next_worker]->push(std::move(batch));
  } catch (...) {
    reader_error = std::current_exception();
  }

  for (auto& q : queues) q->close();
  for (auto& t : workers) t.join();

  if (reader_error) std::rethrow_exception(reader_error);
  for (const auto& err : worker_errors) {
    if (err) std::rethrow_exception(err);
  }

  for (std::size_t w = 0; w < n; ++w) {
    result.tables = merge_tables(result.tables, shard_tables[w]);
    result.stream.merge(shard_stats[w]);
  }
  return result;
}

}  // namespace wdqual
