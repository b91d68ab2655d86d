// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/synth.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>
#include <zlib.h>

namespace wdqual {

namespace {

using nlohmann::json;

// Deterministic draws straight off the engine; std distributions are
// implementation-defined and would break byte-identical dumps across
// standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

bool draw_bernoulli(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

struct PlannedStatement {
  EntityId subject;
  EntityKind subject_kind = EntityKind::Item;
  PropertyId property = 0;
  // (qualifier, value count); the same qualifier may appear in several
  // entries and is merged at render/count time
  std::vector<std::pair<PropertyId, unsigned>> qualifier_values;
};

struct Plan {
  std::vector<PlannedStatement> statements;
};

void validate_spec(const SynthSpec& spec) {
  Count planned = 0;
  for (const auto& sp : spec.statement_plan) {
    planned += sp.count;
    if (sp.property == 0) throw SynthSpecError("statement plan entry without a property");
    for (const auto& qp : sp.qualifiers) {
      if (qp.qualifier == 0) throw SynthSpecError("qualifier plan entry without a qualifier");
      if (qp.values_per_statement == 0) {
        throw SynthSpecError("values_per_statement must be >= 1 for " + property_key(qp.qualifier));
      }
      if (qp.probability && qp.exact_count) {
        throw SynthSpecError("qualifier plan for " + property_key(qp.qualifier) +
                             " sets both probability and exact_count");
      }
      if (qp.probability && (*qp.probability < 0.0 || *qp.probability > 1.0)) {
        throw SynthSpecError("probability out of [0,1] for " + property_key(qp.qualifier));
      }
      if (qp.exact_count && *qp.exact_count > sp.count) {
        throw SynthSpecError("unsatisfiable plan: exact_count " + std::to_string(*qp.exact_count) +
                             " exceeds statement count " + std::to_string(sp.count) + " for " +
                             property_key(qp.qualifier));
      }
    }
  }
  if (planned > 0 && spec.entities == 0) {
    throw SynthSpecError("statement plan needs at least one entity");
  }
  if (spec.example_statement_count > 0 && spec.property_defs.empty()) {
    throw SynthSpecError("example statements need property definitions to exemplify");
  }
}

std::set<EntityId> effective_example_properties(const SynthSpec& spec) {
  if (!spec.example_properties.empty()) return spec.example_properties;
  return AdmissibilityConfig::defaults().example_properties;
}

// All attachment decisions happen here, in one fixed order, so that
// generate_dump and oracle_tables see the same plan for the same seed.
Plan build_plan(const SynthSpec& spec) {
  validate_spec(spec);
  std::mt19937_64 rng(spec.seed);
  const auto cfg = AdmissibilityConfig::defaults();
  Plan plan;

  // scope-constraint statements live on the property entities
  for (const auto& def : spec.property_defs) {
    if (!def.scope) continue;
    PlannedStatement stmt;
    stmt.subject = EntityId::property(def.id);
    stmt.subject_kind = EntityKind::Property;
    stmt.property = static_cast<PropertyId>(cfg.scope_constraint_property.numeric_id());
    stmt.qualifier_values.emplace_back(
        static_cast<PropertyId>(cfg.scope_qualifier_property.numeric_id()),
        static_cast<unsigned>(def.scope->size()));
    plan.statements.push_back(std::move(stmt));
  }

  // example statements: (p, example-property, subject)[p: value]
  const auto examples = effective_example_properties(spec);
  std::vector<EntityId> example_mains(examples.begin(), examples.end());
  for (Count i = 0; i < spec.example_statement_count; ++i) {
    const auto& exemplified = spec.property_defs[i % spec.property_defs.size()];
    PlannedStatement stmt;
    stmt.subject = EntityId::property(exemplified.id);
    stmt.subject_kind = EntityKind::Property;
    stmt.property = static_cast<PropertyId>(example_mains[i % example_mains.size()].numeric_id());
    stmt.qualifier_values.emplace_back(exemplified.id, 1u);
    plan.statements.push_back(std::move(stmt));
  }

  Count k = 0;  // global statement index, spread round-robin over items
  for (const auto& sp : spec.statement_plan) {
    const std::size_t first = plan.statements.size();
    for (Count i = 0; i < sp.count; ++i, ++k) {
      PlannedStatement stmt;
      stmt.subject = EntityId::item(1 + (k % spec.entities));
      stmt.subject_kind = EntityKind::Item;
      stmt.property = sp.property;
      plan.statements.push_back(std::move(stmt));
    }
    for (const auto& qp : sp.qualifiers) {
      if (qp.exact_count) {
        for (Count i = 0; i < *qp.exact_count; ++i) {
          plan.statements[first + i].qualifier_values.emplace_back(qp.qualifier, qp.values_per_statement);
        }
      } else if (qp.probability) {
        for (Count i = 0; i < sp.count; ++i) {
          if (draw_bernoulli(rng, *qp.probability)) {
            plan.statements[first + i].qualifier_values.emplace_back(qp.qualifier, qp.values_per_statement);
          }
        }
      } else {
        for (Count i = 0; i < sp.count; ++i) {
          plan.statements[first + i].qualifier_values.emplace_back(qp.qualifier, qp.values_per_statement);
        }
      }
    }
  }
  return plan;
}

// Ground truth by definition: example statements drop out entirely,
// scope-disallowed qualifiers drop out of the qualifier dictionaries but
// stay in properties_seen_as_qualifier, a statement counts once in F(q)
// and F(p,q) however many values it carries.
FrequencyTables count_plan(const SynthSpec& spec, const Plan& plan) {
  FrequencyTables t;
  t.entities = spec.entities + spec.property_defs.size();
  if (spec.entities > 0) t.entities_by_kind["item"] = spec.entities;
  if (!spec.property_defs.empty()) t.entities_by_kind["property"] = spec.property_defs.size();

  std::map<PropertyId, const SynthPropertyDef*> defs;
  for (const auto& def : spec.property_defs) defs[def.id] = &def;

  std::set<PropertyId> example_mains;
  for (const auto& id : effective_example_properties(spec)) {
    example_mains.insert(static_cast<PropertyId>(id.numeric_id()));
  }

  for (const auto& stmt : plan.statements) {
    if (example_mains.count(stmt.property)) {
      ++t.example_statements_excluded;
      continue;
    }
    ++t.total_statements;
    ++t.statements_by_kind[entity_kind_name(stmt.subject_kind)];
    ++t.p_freq[stmt.property];

    std::map<PropertyId, Count> pairs_by_q;
    for (const auto& [q, nvalues] : stmt.qualifier_values) pairs_by_q[q] += nvalues;

    bool any_admissible = false;
    for (const auto& [q, pairs] : pairs_by_q) {
      t.properties_seen_as_qualifier.insert(q);
      const auto def = defs.find(q);
      const bool allowed = def == defs.end() || !def->second->scope ||
                           def->second->scope->count(ScopeAllowance::AsQualifier) > 0;
      if (!allowed) continue;
      any_admissible = true;
      ++t.q_freq[q];
      ++t.p_q_freq[q][stmt.property];
      t.q_pair_freq[q] += pairs;
      t.total_qualifications += pairs;
    }
    if (any_admissible) ++t.qualified_statements;
  }
  return t;
}

json random_datavalue(std::mt19937_64& rng, Count entities) {
  switch (draw_below(rng, 4)) {
    case 0: {
      const auto n = 1 + draw_below(rng, entities > 0 ? entities : 1);
      return {{"value", {{"entity-type", "item"}, {"numeric-id", n}, {"id", "Q" + std::to_string(n)}}},
              {"type", "wikibase-entityid"}};
    }
    case 1: {
      const auto year = 1700 + draw_below(rng, 400);
      char buf[40];
      std::snprintf(buf, sizeof(buf), "+%04llu-00-00T00:00:00Z", static_cast<unsigned long long>(year));
      return {{"value",
               {{"time", buf},
                {"timezone", 0},
                {"before", 0},
                {"after", 0},
                {"precision", 9},
                {"calendarmodel", "http://www.wikidata.org/entity/Q1985727"}}},
              {"type", "time"}};
    }
    case 2: {
      return {{"value", {{"amount", "+" + std::to_string(draw_below(rng, 1000))}, {"unit", "1"}}},
              {"type", "quantity"}};
    }
    default: {
      char buf[24];
      std::snprintf(buf, sizeof(buf), "s%08llx", static_cast<unsigned long long>(rng() & 0xffffffffu));
      return {{"value", buf}, {"type", "string"}};
    }
  }
}

json snak_json(const std::string& property, std::mt19937_64& rng, Count entities) {
  json dv = random_datavalue(rng, entities);
  const std::string dv_type = dv.at("type").get<std::string>();
  std::string datatype = "string";
  if (dv_type == "wikibase-entityid") datatype = "wikibase-item";
  if (dv_type == "time") datatype = "time";
  if (dv_type == "quantity") datatype = "quantity";
  return {{"snaktype", "value"}, {"property", property}, {"datatype", datatype}, {"datavalue", dv}};
}

json item_ref_snak(const std::string& property, const EntityId& target) {
  return {{"snaktype", "value"},
          {"property", property},
          {"datatype", "wikibase-item"},
          {"datavalue",
           {{"value",
             {{"entity-type", "item"}, {"numeric-id", target.numeric_id()}, {"id", target.str()}}},
            {"type", "wikibase-entityid"}}}};
}

json statement_json(const PlannedStatement& stmt, std::uint64_t ordinal, std::mt19937_64& rng,
                    Count entities) {
  const std::string main_key = property_key(stmt.property);
  json s;
  s["type"] = "statement";
  s["id"] = stmt.subject.str() + "$" + std::to_string(ordinal);
  s["rank"] = "normal";
  s["mainsnak"] = snak_json(main_key, rng, entities);

  if (!stmt.qualifier_values.empty()) {
    std::map<PropertyId, Count> merged;
    std::vector<PropertyId> order;
    for (const auto& [q, n] : stmt.qualifier_values) {
      if (!merged.count(q)) order.push_back(q);
      merged[q] += n;
    }
    json quals = json::object();
    json qorder = json::array();
    for (PropertyId q : order) {
      const std::string key = property_key(q);
      json values = json::array();
      for (Count i = 0; i < merged[q]; ++i) values.push_back(snak_json(key, rng, entities));
      quals[key] = std::move(values);
      qorder.push_back(key);
    }
    s["qualifiers"] = std::move(quals);
    s["qualifiers-order"] = std::move(qorder);
  }
  return s;
}

}  // namespace

SynthOutput generate_dump(const SynthSpec& spec) {
  const Plan plan = build_plan(spec);
  const auto cfg = AdmissibilityConfig::defaults();

  // value randomness is separate from plan randomness so both passes
  // over the seed agree on the decisions
  std::mt19937_64 value_rng(spec.seed ^ 0x9e3779b97f4a7c15ull);

  // group planned statements per subject entity
  std::map<std::string, std::vector<const PlannedStatement*>> by_subject;
  for (const auto& stmt : plan.statements) by_subject[stmt.subject.str()].push_back(&stmt);

  // scope item per allowance, for rendering constraint qualifiers
  std::map<ScopeAllowance, EntityId> scope_items;
  for (const auto& [item, allowance] : cfg.scope_value_map) scope_items.emplace(allowance, item);

  std::vector<std::string> lines;
  std::uint64_t ordinal = 0;

  auto render_statements = [&](const EntityId& subject, json& claims) {
    auto it = by_subject.find(subject.str());
    if (it == by_subject.end()) return;
    for (const PlannedStatement* stmt : it->second) {
      const std::string main_key = property_key(stmt->property);
      json s;
      const bool is_constraint =
          stmt->subject_kind == EntityKind::Property &&
          stmt->property == static_cast<PropertyId>(cfg.scope_constraint_property.numeric_id());
      if (is_constraint) {
        // the constraint statement's value and qualifiers are structural,
        // not random: (p, constraint, scope-constraint)[scope: items...]
        s["type"] = "statement";
        s["id"] = subject.str() + "$" + std::to_string(ordinal++);
        s["rank"] = "normal";
        s["mainsnak"] = item_ref_snak(main_key, cfg.scope_constraint_item);
        const std::string qkey = cfg.scope_qualifier_property.str();
        json values = json::array();
        const auto& def = *std::find_if(spec.property_defs.begin(), spec.property_defs.end(),
                                        [&](const SynthPropertyDef& d) {
                                          return EntityId::property(d.id) == subject;
                                        });
        for (ScopeAllowance allowance : *def.scope) {
          values.push_back(item_ref_snak(qkey, scope_items.at(allowance)));
        }
        s["qualifiers"] = {{qkey, std::move(values)}};
        s["qualifiers-order"] = {qkey};
      } else {
        s = statement_json(*stmt, ordinal++, value_rng, spec.entities);
      }
      claims[main_key].push_back(std::move(s));
    }
  };

  for (const auto& def : spec.property_defs) {
    const EntityId id = EntityId::property(def.id);
    json entity;
    entity["type"] = "property";
    entity["id"] = id.str();
    entity["datatype"] = def.datatype;
    entity["claims"] = json::object();
    render_statements(id, entity["claims"]);
    lines.push_back(entity.dump());
  }
  for (Count i = 1; i <= spec.entities; ++i) {
    const EntityId id = EntityId::item(i);
    json entity;
    entity["type"] = "item";
    entity["id"] = id.str();
    entity["claims"] = json::object();
    render_statements(id, entity["claims"]);
    lines.push_back(entity.dump());
  }

  SynthOutput out;
  out.dump_bytes = "[\n";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    out.dump_bytes += lines[i];
    if (i + 1 < lines.size()) out.dump_bytes += ',';
    out.dump_bytes += '\n';
  }
  out.dump_bytes += "]\n";
  out.ground_truth = count_plan(spec, plan);
  return out;
}

FrequencyTables oracle_tables(const SynthSpec& spec) { return count_plan(spec, build_plan(spec)); }

void write_dump_file(const std::string& dump_bytes, const std::filesystem::path& path) {
  if (path.extension() == ".gz") {
    gzFile gz = gzopen(path.string().c_str(), "wb");
    if (!gz) throw std::runtime_error("cannot write " + path.string());
    const char* data = dump_bytes.data();
    std::size_t remaining = dump_bytes.size();
    while (remaining > 0) {
      const unsigned chunk = static_cast<unsigned>(std::min<std::size_t>(remaining, 1u << 20));
      if (gzwrite(gz, data, chunk) != static_cast<int>(chunk)) {
        gzclose(gz);
        throw std::runtime_error("gzip write failed for " + path.string());
      }
      data += chunk;
      remaining -= chunk;
    }
    if (gzclose(gz) != Z_OK) throw std::runtime_error("gzip close failed for " + path.string());
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << dump_bytes;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

SynthSpec SynthSpec::from_json_text(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SynthSpecError(name + ": " + e.what());
  }

  SynthSpec spec;
  spec.entities = j.value("entities", Count{0});
  spec.seed = j.value("seed", std::uint64_t{0});
  spec.example_statement_count = j.value("example_statement_count", Count{0});

  if (j.contains("example_properties")) {
    for (const auto& p : j.at("example_properties")) {
      if (auto id = EntityId::parse(p.get<std::string>())) spec.example_properties.insert(*id);
    }
  }

  auto parse_pid = [&](const json& v, const char* what) -> PropertyId {
    auto id = parse_property_key(v.get<std::string>());
    if (!id) throw SynthSpecError(name + ": bad " + what + " '" + v.get<std::string>() + "'");
    return *id;
  };

  if (j.contains("properties")) {
    for (const auto& d : j.at("properties")) {
      SynthPropertyDef def;
      def.id = parse_pid(d.at("id"), "property id");
      def.datatype = d.value("datatype", "wikibase-item");
      if (d.contains("scope")) {
        std::set<ScopeAllowance> scope;
        for (const auto& s : d.at("scope")) {
          auto allowance = parse_scope_allowance(s.get<std::string>());
          if (!allowance) throw SynthSpecError(name + ": unknown scope '" + s.get<std::string>() + "'");
          scope.insert(*allowance);
        }
        def.scope = std::move(scope);
      }
      spec.property_defs.push_back(std::move(def));
    }
  }

  if (j.contains("statements")) {
    for (const auto& s : j.at("statements")) {
      SynthStatementPlan plan;
      plan.property = parse_pid(s.at("property"), "statement property");
      plan.count = s.at("count").get<Count>();
      if (s.contains("qualifiers")) {
        for (const auto& q : s.at("qualifiers")) {
          SynthQualifierPlan qp;
          qp.qualifier = parse_pid(q.at("qualifier"), "qualifier");
          qp.values_per_statement = q.value("values_per_statement", 1u);
          if (q.contains("probability")) qp.probability = q.at("probability").get<double>();
          if (q.contains("exact_count")) qp.exact_count = q.at("exact_count").get<Count>();
          plan.qualifiers.push_back(qp);
        }
      }
      spec.statement_plan.push_back(std::move(plan));
    }
  }
  validate_spec(spec);
  return spec;
}

SynthSpec SynthSpec::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str(), file.string());
}

}  // namespace wdqual
