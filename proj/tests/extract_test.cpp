// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include <doctest.h>

#include <random>

#include "test_support.hpp"
#include "wdqual/extract.hpp"
#include "wdqual/synth.hpp"

using namespace wdqual;

namespace {

Statement make_statement(const EntityId& subject, PropertyId property,
                         std::vector<std::pair<PropertyId, int>> qualifiers = {}) {
  Statement stmt;
  stmt.subject = subject;
  stmt.property = EntityId::property(property);
  stmt.value = SnakValue::entity_ref(EntityId::item(1));
  for (auto [q, nvalues] : qualifiers) {
    QualifierGroup group;
    group.property = EntityId::property(q);
    for (int i = 0; i < nvalues; ++i) group.values.push_back(SnakValue::string("v" + std::to_string(i)));
    stmt.qualifiers.push_back(std::move(group));
  }
  return stmt;
}

EntityRecord make_item(std::uint64_t n, std::vector<Statement> statements) {
  EntityRecord rec;
  rec.id = EntityId::item(n);
  rec.kind = EntityKind::Item;
  rec.statements = std::move(statements);
  return rec;
}

}  // namespace

TEST_CASE("single statement with two qualifiers counts as in the worked example") {
  // (Q1, P26, Q2)[P580: 1960, P582: 1965]
  const auto cfg = AdmissibilityConfig::defaults();
  PropertyCatalog catalog;
  FrequencyTables t;
  accumulate_entity(make_item(1, {make_statement(EntityId::item(1), 26, {{580, 1}, {582, 1}})}),
                    catalog, cfg, t);

  CHECK(t.p_freq == std::map<PropertyId, Count>{{26, 1}});
  CHECK(t.q_freq == std::map<PropertyId, Count>{{580, 1}, {582, 1}});
  CHECK(t.p_q_freq[580] == std::map<PropertyId, Count>{{26, 1}});
  CHECK(t.p_q_freq[582] == std::map<PropertyId, Count>{{26, 1}});
  CHECK(t.total_qualifications == 2);
  CHECK(t.qualified_statements == 1);
  CHECK(t.total_statements == 1);
  CHECK(check_table_consistency(t).empty());
}

TEST_CASE("scope-disallowed qualifiers are excluded but remembered") {
  const auto cfg = AdmissibilityConfig::defaults();
  PropertyCatalog catalog;
  PropertyMeta p31;
  p31.id = EntityId::property(31);
  p31.scope_allowances = std::set<ScopeAllowance>{ScopeAllowance::AsMainValue};
  catalog.insert(p31);

  FrequencyTables t;
  accumulate_entity(make_item(1, {make_statement(EntityId::item(1), 26, {{31, 1}, {580, 1}})}),
                    catalog, cfg, t);

  CHECK(t.q_freq.count(31) == 0);
  CHECK(t.p_q_freq.count(31) == 0);
  CHECK(t.properties_seen_as_qualifier.count(31) == 1);
  CHECK(t.properties_seen_as_qualifier.count(580) == 1);
  CHECK(t.q_freq.at(580) == 1);
  CHECK(t.total_qualifications == 1);
}

TEST_CASE("example statements contribute to no count") {
  const auto cfg = AdmissibilityConfig::defaults();
  PropertyCatalog catalog;
  FrequencyTables t;
  // (P659, P1855, Q20)[P659: x]
  EntityRecord prop;
  prop.id = EntityId::property(659);
  prop.kind = EntityKind::Property;
  prop.statements = {make_statement(EntityId::property(659), 1855, {{659, 1}})};
  accumulate_entity(prop, catalog, cfg, t);

  CHECK(t.total_statements == 0);
  CHECK(t.p_freq.empty());
  CHECK(t.q_freq.empty());
  CHECK(t.properties_seen_as_qualifier.empty());
  CHECK(t.example_statements_excluded == 1);
}

TEST_CASE("deprecated statements obey the config flag") {
  auto cfg = AdmissibilityConfig::defaults();
  PropertyCatalog catalog;

  auto stmt = make_statement(EntityId::item(1), 26, {{580, 1}});
  stmt.rank = StatementRank::Deprecated;

  FrequencyTables with;
  accumulate_entity(make_item(1, {stmt}), catalog, cfg, with);
  CHECK(with.total_statements == 1);

  cfg.include_deprecated_rank = false;
  FrequencyTables without;
  accumulate_entity(make_item(1, {stmt}), catalog, cfg, without);
  CHECK(without.total_statements == 0);
  CHECK(without.deprecated_statements_excluded == 1);
  CHECK(without.q_freq.empty());
}

TEST_CASE("multi-valued and repeated qualifier groups count statements once") {
  const auto cfg = AdmissibilityConfig::defaults();
  PropertyCatalog catalog;

  auto stmt = make_statement(EntityId::item(1), 800, {{1545, 3}});
  // a second group with the same qualifier property (multimap shape)
  stmt.qualifiers.push_back(QualifierGroup{EntityId::property(1545), {SnakValue::string("again")}});

  FrequencyTables t;
  accumulate_entity(make_item(1, {stmt}), catalog, cfg, t);
  CHECK(t.q_freq.at(1545) == 1);               // once per statement
  CHECK(t.p_q_freq[1545].at(800) == 1);        // once per statement
  CHECK(t.q_pair_freq.at(1545) == 4);          // but four qualifier-value pairs
  CHECK(t.total_qualifications == 4);
  CHECK(check_table_consistency(t).empty());
}

TEST_CASE("property catalog decodes scope constraints from claims") {
  const auto cfg = AdmissibilityConfig::defaults();

  // property entity P31 with (P31, P2302, Q53869507)[P5314: as-main-value]
  Statement constraint;
  constraint.subject = EntityId::property(31);
  constraint.property = cfg.scope_constraint_property;
  constraint.value = SnakValue::entity_ref(cfg.scope_constraint_item);
  constraint.qualifiers.push_back(
      QualifierGroup{cfg.scope_qualifier_property, {SnakValue::entity_ref(EntityId::item(54828448))}});

  EntityRecord prop;
  prop.id = EntityId::property(31);
  prop.kind = EntityKind::Property;
  prop.datatype = "wikibase-item";
  prop.statements = {constraint};

  PropertyCatalog catalog;
  collect_property_meta(prop, cfg, catalog);
  const auto meta = catalog.lookup(EntityId::property(31));
  REQUIRE(meta.scope_allowances);
  CHECK(*meta.scope_allowances == std::set<ScopeAllowance>{ScopeAllowance::AsMainValue});
  CHECK(qualifier_admissibility(meta) == QualifierAdmissibility::DisallowedByScope);

  SUBCASE("no constraint claims means unconstrained") {
    EntityRecord bare;
    bare.id = EntityId::property(580);
    bare.kind = EntityKind::Property;
    collect_property_meta(bare, cfg, catalog);
    CHECK(!catalog.lookup(EntityId::property(580)).scope_allowances);
  }

  SUBCASE("constraint with undecodable scope values is counted, not applied") {
    Statement junk = constraint;
    junk.qualifiers[0].values = {SnakValue::entity_ref(EntityId::item(999999))};
    EntityRecord odd;
    odd.id = EntityId::property(99);
    odd.kind = EntityKind::Property;
    odd.statements = {junk};
    PropertyCatalog c2;
    collect_property_meta(odd, cfg, c2);
    CHECK(!c2.lookup(EntityId::property(99)).scope_allowances);
    CHECK(c2.unknown_constraint_shapes == 1);
  }

  SUBCASE("non-property entities are ignored") {
    PropertyCatalog c3;
    collect_property_meta(make_item(5, {}), cfg, c3);
    CHECK(c3.size() == 0);
  }

  SUBCASE("unknown properties get an unconstrained default") {
    CHECK(!catalog.lookup(EntityId::property(424242)).scope_allowances);
  }
}

TEST_CASE("merge_tables is associative and commutative with the empty identity") {
  std::mt19937_64 rng(777);
  auto random_tables = [&rng]() {
    FrequencyTables t;
    const int nq = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < nq; ++i) {
      const PropertyId q = 1 + static_cast<PropertyId>(rng() % 6);
      const PropertyId p = 100 + static_cast<PropertyId>(rng() % 3);
      const Count n = 1 + rng() % 50;
      t.q_freq[q] += n;
      t.p_q_freq[q][p] += n;
      t.q_pair_freq[q] += n + rng() % 5;
      t.p_freq[p] += n + rng() % 10;
      t.total_statements += n;
      t.properties_seen_as_qualifier.insert(q);
    }
    return t;
  };

  const FrequencyTables empty;
  for (int round = 0; round < 50; ++round) {
    const auto a = random_tables();
    const auto b = random_tables();
    const auto c = random_tables();
    CHECK(merge_tables(a, empty) == a);
    CHECK(merge_tables(empty, a) == a);
    CHECK(merge_tables(a, b) == merge_tables(b, a));
    CHECK(merge_tables(merge_tables(a, b), c) == merge_tables(a, merge_tables(b, c)));
  }
}

TEST_CASE("sharded extraction equals single-pass extraction exactly") {
  const auto spec = testing::random_synth_spec(4242, 800);
  const auto generated = generate_dump(spec);

  testing::TempDir dir("shards");
  write_dump_file(generated.dump_bytes, dir / "dump.json");

  const auto cfg = AdmissibilityConfig::defaults();
  const auto catalog = build_catalog(dir / "dump.json", Compression::Auto, cfg);

  const auto single = extract_from_dump(dir / "dump.json", Compression::Auto, catalog.catalog, cfg, 1);
  for (int shards : {2, 3, 8}) {
    const auto sharded = extract_from_dump(dir / "dump.json", Compression::Auto, catalog.catalog, cfg, shards);
    CHECK(sharded.tables == single.tables);
    CHECK(sharded.stream.lines == single.stream.lines);
    CHECK(sharded.stream.skipped == single.stream.skipped);
  }
  CHECK(single.tables == generated.ground_truth);
}

TEST_CASE("table save/load round-trip preserves every dictionary") {
  const auto spec = testing::random_synth_spec(99, 200);
  const auto truth = oracle_tables(spec);

  testing::TempDir dir("tables");
  save_tables(truth, IngestStatsExtra{}, dir.path());
  const auto reloaded = load_tables(dir.path());
  CHECK(reloaded == truth);
}
