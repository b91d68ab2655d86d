// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors
//
// End-to-end acceptance checks. Each criterion prints exactly one
// PASS/FAIL line; the binary exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "wdqual/abstraction.hpp"
#include "wdqual/cli.hpp"
#include "wdqual/diversity.hpp"
#include "wdqual/extract.hpp"
#include "wdqual/scores.hpp"
#include "wdqual/statement_json.hpp"
#include "wdqual/synth.hpp"
#include "wdqual/taxonomy.hpp"

using namespace wdqual;
using Clock = std::chrono::steady_clock;

namespace {

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void expect_near(double got, double want, double tol, const std::string& what) {
    if (!(std::abs(got - want) <= tol)) {
      char buf[160];
      std::snprintf(buf, sizeof(buf), "%s: got %.12g, want %.12g +/- %.3g", what.c_str(), got, want, tol);
      failures_.push_back(buf);
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

double elapsed_ms(Clock::time_point from) {
  return std::chrono::duration<double, std::milli>(Clock::now() - from).count();
}

AbundanceMap table1_counts() {
  return {{645, 514956}, {644, 514955}, {2548, 422711}, {1057, 36553},
          {2043, 46},    {1855, 3},     {3331, 2},      {4844, 1}};
}

// ---- criteria -------------------------------------------------------

void criterion_table1(Checker& c) {
  const auto counts = table1_counts();
  hill_diversity(counts);  // warm-up, allocator noise off the clock
  const auto t0 = Clock::now();
  const double diversity = hill_diversity(counts);
  const double rel = relative_frequencies(counts).at(645);
  const double ms = elapsed_ms(t0);
  c.expect_near(diversity, 3.26, 0.01, "diversity of the eight frequencies");
  c.expect_near(rel, 0.3457874454, 1e-9, "relative frequency of P645");
  c.expect(ms < 1.0, "runtime " + std::to_string(ms) + " ms >= 1 ms");
}

void criterion_table3(Checker& c) {
  FrequencyTables t;
  t.p_freq[50] = 33552582;
  t.p_q_freq[1545][50] = 31769610;
  t.p_freq[5753] = 90169;
  t.p_q_freq[1545][5753] = 90169;
  t.q_freq[1545] = 31769610 + 90169;

  proportional_frequencies(1545, t);  // warm-up
  const auto t0 = Clock::now();
  const auto pf = proportional_frequencies(1545, t);
  const double ms = elapsed_ms(t0);
  c.expect_near(pf.at(50), 0.947, 0.0005, "PF(P50, P1545)");
  c.expect(pf.at(5753) == 1.0, "PF(P5753, P1545) must be exactly 1.0");
  c.expect(ms < 1.0, "runtime " + std::to_string(ms) + " ms >= 1 ms");
}

void criterion_statement_projection(Checker& c) {
  const auto registry =
      load_classification(std::filesystem::path(WDQUAL_DATA_DIR) / "qualifier-classification.csv");
  const std::string statement_text = R"({
    "subject": "Q182450", "property": "P26", "value": {"type": "entity", "id": "Q253916"},
    "qualifiers": [
      {"property": "P580", "value": {"type": "time", "time": "+1960-00-00T00:00:00Z", "precision": 9}},
      {"property": "P582", "value": {"type": "time", "time": "+1965-00-00T00:00:00Z", "precision": 9}},
      {"property": "P1534", "value": {"type": "entity", "id": "Q93190"}}
    ]})";

  const auto t0 = Clock::now();
  const auto stmt = parse_statement_json_text(statement_text);
  const auto values = project_statement(stmt, registry);
  const auto meet = temporal_intersection(values.temporal, TemporalContext::years(1963, 1970));
  const double ms = elapsed_ms(t0);

  c.expect(values.temporal == TemporalContext::years(1960, 1965),
           "temporal value must be [1960, 1965], got " + values.temporal.str());
  c.expect(values.causality.end_cause == std::vector<EntityId>{EntityId::item(93190)},
           "causality end-cause must be [Q93190]");
  c.expect(values.causality.has_cause.empty() && values.causality.effects.empty(),
           "no other causality fields expected");
  c.expect(meet.status == TemporalIntersection::Status::NonEmpty, "intersection must be non-empty");
  if (meet.status == TemporalIntersection::Status::NonEmpty) {
    c.expect(meet.value == TemporalContext::years(1963, 1965),
             "intersection must be [1963, 1965], got " + meet.value.str());
  }
  c.expect(ms < 1.0, "runtime " + std::to_string(ms) + " ms >= 1 ms");
}

void criterion_equal_abundance(Checker& c) {
  for (std::size_t r : {1u, 2u, 7u, 100u}) {
    AbundanceMap m;
    for (std::size_t i = 0; i < r; ++i) m[static_cast<PropertyId>(i + 1)] = 2.25;
    c.expect_near(hill_diversity(m), static_cast<double>(r), 1e-9,
                  "uniform diversity for R=" + std::to_string(r));
  }
  c.expect(hill_diversity({{7, 41.0}}) == 1.0, "single-key diversity must be exactly 1.0");

  FrequencyTables t;
  t.p_freq[3] = 10;
  t.p_q_freq[9][3] = 4;
  t.q_freq[9] = 4;
  c.expect(proportional_diversity(9, t) == 1.0, "single-property qualifier diversity must be exactly 1.0");
}

void criterion_bounds_and_scale(Checker& c) {
  std::mt19937_64 rng(0xACCE5);
  for (int round = 0; round < 1000; ++round) {
    AbundanceMap m;
    const std::size_t keys = 1 + rng() % 50;
    for (std::size_t i = 0; i < keys; ++i) {
      m[static_cast<PropertyId>(1 + rng() % 100000)] =
          static_cast<double>(1 + rng() % 1000000) / 997.0;
    }
    const double d = hill_diversity(m);
    const double r = static_cast<double>(m.size());
    if (!(d >= 1.0 && d <= r)) {
      c.expect(false, "bounds violated on round " + std::to_string(round) + ": D=" +
                          std::to_string(d) + ", R=" + std::to_string(r));
      return;
    }
    // random c spanning (0, 1e6]
    const double mantissa = static_cast<double>(1 + rng() % 1000000);
    const double scale = rng() % 2 == 0 ? mantissa : mantissa / 1e6;
    AbundanceMap scaled;
    for (const auto& [k, w] : m) scaled[k] = w * scale;
    if (std::abs(hill_diversity(scaled) - d) >= 1e-10) {
      c.expect(false, "scale invariance violated on round " + std::to_string(round));
      return;
    }
  }
}

void criterion_oracle_equivalence(Checker& c) {
  const auto t0 = Clock::now();
  testing::TempDir dir("acc-oracle");
  const auto cfg = AdmissibilityConfig::defaults();

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto spec = testing::random_synth_spec(seed * 7919, 5000);
    const auto generated = generate_dump(spec);
    const auto truth = oracle_tables(spec);
    if (!(generated.ground_truth == truth)) {
      c.expect(false, "generator ground truth mismatch for seed " + std::to_string(seed));
      return;
    }

    const auto dump_path = dir / ("dump-" + std::to_string(seed) + ".json");
    write_dump_file(generated.dump_bytes, dump_path);
    const auto catalog = build_catalog(dump_path, Compression::Auto, cfg);
    for (int shards : {1, 2, 8}) {
      const auto extracted = extract_from_dump(dump_path, Compression::Auto, catalog.catalog, cfg, shards);
      if (!(extracted.tables == truth)) {
        c.expect(false, "extracted tables != oracle for seed " + std::to_string(seed) + ", shards " +
                            std::to_string(shards));
        return;
      }
    }
    std::filesystem::remove(dump_path);
  }
  const double seconds = elapsed_ms(t0) / 1000.0;
  c.expect(seconds < 30.0, "suite took " + std::to_string(seconds) + " s >= 30 s");
}

void criterion_exclusion_rules(Checker& c) {
  SynthSpec spec;
  spec.entities = 25;
  spec.seed = 5;
  spec.property_defs.push_back({31, "wikibase-item", std::set<ScopeAllowance>{ScopeAllowance::AsMainValue}});
  spec.property_defs.push_back({580, "time", std::set<ScopeAllowance>{ScopeAllowance::AsQualifier}});
  spec.property_defs.push_back({1545, "string", std::nullopt});
  spec.statement_plan.push_back({26, 30,
                                 {{31, 1, std::nullopt, Count{11}},
                                  {580, 1, std::nullopt, Count{17}},
                                  {1545, 2, std::nullopt, std::nullopt}}});
  spec.example_statement_count = 4;

  const auto generated = generate_dump(spec);
  testing::TempDir dir("acc-excl");
  write_dump_file(generated.dump_bytes, dir / "dump.json");
  const auto cfg = AdmissibilityConfig::defaults();
  const auto catalog = build_catalog(dir / "dump.json", Compression::Auto, cfg);
  const auto t = extract_from_dump(dir / "dump.json", Compression::Auto, catalog.catalog, cfg, 1).tables;

  c.expect(t.example_statements_excluded == 4, "exactly 4 example statements must be excluded");
  c.expect(t.q_freq.count(31) == 0, "P31 must not appear in q-freq");
  c.expect(t.p_q_freq.count(31) == 0, "P31 must not appear in p-q-freq");
  c.expect(t.properties_seen_as_qualifier.count(31) == 1, "P31 must be recorded as seen");
  c.expect(t.q_freq.count(580) == 1 && t.q_freq.at(580) == 17, "F(P580) must be exactly 17");
  c.expect(t.q_freq.at(1545) == 30, "F(P1545) must be exactly 30");
  c.expect(t.q_pair_freq.at(1545) == 60, "P1545 must contribute exactly 60 pairs");
  // P5314 on the two constrained property entities also counts
  c.expect(t.q_freq.count(5314) == 1 && t.q_freq.at(5314) == 2, "F(P5314) must be exactly 2");
  c.expect(t.total_qualifications == 17 + 60 + 2, "pair total must be exactly 79");
  c.expect(t == oracle_tables(spec), "tables must equal the oracle exactly");
}

void criterion_interval_oracle(Checker& c) {
  std::mt19937_64 rng(0x1CEB00DA);
  for (int round = 0; round < 10000; ++round) {
    const auto ia = testing::random_year_interval(rng);
    const auto ib = testing::random_year_interval(rng);
    const auto a = ia.to_context();
    const auto b = ib.to_context();

    const bool expected = testing::brute_force_intersects(ia, ib);
    const auto got = temporal_intersects(a, b);
    const auto meet = temporal_intersection(a, b);

    if (got == Ternary::Unknown) {
      c.expect(false, "unexpected Unknown on integer years, round " + std::to_string(round));
      return;
    }
    if ((got == Ternary::True) != expected) {
      c.expect(false, "intersects mismatch on round " + std::to_string(round));
      return;
    }
    const bool meet_nonempty = meet.status == TemporalIntersection::Status::NonEmpty;
    if (meet_nonempty != expected) {
      c.expect(false, "intersects/intersection disagreement on round " + std::to_string(round));
      return;
    }
    if (meet_nonempty) {
      const auto lo = meet.value.start;
      const auto hi = meet.value.end;
      const bool lo_ok = !ia.lo && !ib.lo
                             ? lo.kind == TimeBound::Kind::NegInfinity
                             : lo.is_finite() && lo.at.year == std::max(ia.lo.value_or(-1000000),
                                                                        ib.lo.value_or(-1000000));
      const bool hi_ok = !ia.hi && !ib.hi
                             ? hi.kind == TimeBound::Kind::PosInfinity
                             : hi.is_finite() && hi.at.year == std::min(ia.hi.value_or(1000000),
                                                                        ib.hi.value_or(1000000));
      if (!lo_ok || !hi_ok) {
        c.expect(false, "intersection bounds wrong on round " + std::to_string(round));
        return;
      }
    }
  }
}

void criterion_report_conservation(Checker& c) {
  std::mt19937_64 rng(0x5EC0D);
  for (int round = 0; round < 200; ++round) {
    std::vector<DiversityScore> scores;
    const std::size_t n = 1 + rng() % 60;
    for (std::size_t i = 0; i < n; ++i) {
      DiversityScore s;
      s.qualifier = static_cast<PropertyId>(i + 1);
      s.frequency = rng() % 1000000;
      s.diversity_proportional = 1.0 + static_cast<double>(rng() % 10000) / 100.0;
      s.rank = static_cast<std::uint32_t>(i + 1);
      scores.push_back(s);
    }
    TaxonomyRegistry reg;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 4 == 0) continue;
      reg.assign(static_cast<PropertyId>(i + 1),
                 CategoryPath{kAllLeafCategories[rng() % kAllLeafCategories.size()]});
    }
    const Count k = rng() % (n + 1);
    const auto report = category_report(reg, scores, k);

    Count assigned = 0;
    for (const auto& row : report.rows) assigned += row.qualifier_count;
    if (assigned + report.unassigned.size() != k) {
      c.expect(false, "count conservation violated on round " + std::to_string(round));
      return;
    }
    for (const auto& row : report.rows) {
      double lo = 1e308, hi = -1e308;
      for (Count i = 0; i < k; ++i) {
        const auto cat = reg.category_of(scores[i].qualifier);
        if (cat && *cat == row.category) {
          lo = std::min(lo, scores[i].diversity_proportional);
          hi = std::max(hi, scores[i].diversity_proportional);
        }
      }
      if (!(row.average_diversity >= lo - 1e-9 && row.average_diversity <= hi + 1e-9)) {
        c.expect(false, "leaf average outside member range on round " + std::to_string(round));
        return;
      }
    }
    if (category_report_json(report) != category_report_json(category_report(reg, scores, k)) ||
        category_report_csv(report) != category_report_csv(category_report(reg, scores, k))) {
      c.expect(false, "report serialization not byte-identical on round " + std::to_string(round));
      return;
    }
  }
}

void criterion_shard_determinism(Checker& c) {
  testing::TempDir dir("acc-shards");
  const auto spec = testing::random_synth_spec(0xD17E, 1500);
  const auto generated = generate_dump(spec);
  write_dump_file(generated.dump_bytes, dir / "dump.json");

  std::ostringstream out, err;
  auto run = [&](const std::vector<std::string>& args) { return cli::run(args, out, err); };
  if (run({"extract", (dir / "dump.json").string(), "--out", (dir / "t1").string(), "--shards", "1"}) != 0 ||
      run({"extract", (dir / "dump.json").string(), "--out", (dir / "t8").string(), "--shards", "8"}) != 0) {
    c.expect(false, "extract failed: " + err.str());
    return;
  }
  for (const char* f : {"p-freq.json", "q-freq.json", "p-q-freq.json", "q-pair-freq.json",
                        "ingest-stats.json"}) {
    const auto a = testing::read_file(dir / "t1" / f);
    const auto b = testing::read_file(dir / "t8" / f);
    c.expect(!a.empty() && a == b, std::string(f) + " must be byte-identical across shard counts");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
      {"1 genomic-assembly regression: diversity 3.26 +/- 0.01, rel freq of P645, < 1 ms",
       criterion_table1},
      {"2 series-ordinal regression: PF(P50) 0.947 +/- 0.0005, PF(P5753) exactly 1, < 1 ms",
       criterion_table3},
      {"3 spouse-statement projection: temporal [1960,1965], end-cause divorce, "
       "intersection with [1963,1970] = [1963,1965], < 1 ms",
       criterion_statement_projection},
      {"4 equal-abundance identity: uniform R in {1,2,7,100} gives R +/- 1e-9; single key exactly 1",
       criterion_equal_abundance},
      {"5 bounds and scale invariance on 1000 random abundance maps", criterion_bounds_and_scale},
      {"6 oracle equivalence on 20 random synth dumps, shards {1,2,8}, exact, < 30 s",
       criterion_oracle_equivalence},
      {"7 exclusion rules: planted example statements and scope-disallowed qualifiers, exact counts",
       criterion_exclusion_rules},
      {"8 interval oracle: 10000 random year intervals, intersects == brute force == nonempty meet",
       criterion_interval_oracle},
      {"9 report conservation, leaf averages in range, byte-identical serialization",
       criterion_report_conservation},
      {"10 extract determinism: 1 vs 8 shards give byte-identical table files",
       criterion_shard_determinism},
  };

  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Checker checker;
    try {
      fn(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    if (checker.failures().empty()) {
      std::cout << "PASS  " << name << "\n";
    } else {
      ++failed;
      std::cout << "FAIL  " << name << "\n";
      for (const auto& why : checker.failures()) std::cout << "      - " << why << "\n";
    }
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}
