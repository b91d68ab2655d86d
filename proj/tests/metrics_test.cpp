// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "test_support.hpp"
#include "wdqual/diversity.hpp"
#include "wdqual/scores.hpp"

using namespace wdqual;

namespace {

// The genomic-assembly qualifier's per-property statement counts; the
// classic worked example for the index.
AbundanceMap genomic_assembly_counts() {
  return {{645, 514956}, {644, 514955}, {2548, 422711}, {1057, 36553},
          {2043, 46},    {1855, 3},     {3331, 2},      {4844, 1}};
}

}  // namespace

TEST_CASE("relative frequencies normalize and drop zeros") {
  const auto rel = relative_frequencies(genomic_assembly_counts());
  CHECK(std::abs(rel.at(645) - 0.3457874454) < 1e-9);

  double sum = 0.0;
  for (const auto& [k, p] : rel) sum += p;
  CHECK(std::abs(sum - 1.0) < 1e-12);

  CHECK(relative_frequencies({{1, 5.0}}).at(1) == 1.0);
  const auto even = relative_frequencies({{1, 2.0}, {2, 2.0}});
  CHECK(even.at(1) == 0.5);
  CHECK(even.at(2) == 0.5);

  const auto dropped = relative_frequencies({{1, 1.0}, {2, 0.0}});
  CHECK(dropped.size() == 1);

  CHECK_THROWS_AS(relative_frequencies({{1, 0.0}}), EmptyAbundanceError);
  CHECK_THROWS_AS(relative_frequencies({}), EmptyAbundanceError);
}

TEST_CASE("hill diversity of the genomic-assembly counts is 3.26") {
  CHECK(std::abs(hill_diversity(genomic_assembly_counts()) - 3.26) < 0.01);
}

TEST_CASE("uniform maps have diversity R, single key exactly 1") {
  for (std::size_t r : {1u, 2u, 7u, 100u}) {
    AbundanceMap m;
    for (std::size_t i = 0; i < r; ++i) m[static_cast<PropertyId>(i + 1)] = 3.5;
    CHECK(std::abs(hill_diversity(m) - static_cast<double>(r)) < 1e-9);
  }
  CHECK(hill_diversity({{42, 123.0}}) == 1.0);
}

TEST_CASE("hill diversity agrees with the extended-precision reference") {
  std::mt19937_64 rng(987654);
  for (int round = 0; round < 200; ++round) {
    AbundanceMap m;
    const std::size_t keys = 1 + rng() % 12;
    for (std::size_t i = 0; i < keys; ++i) {
      m[static_cast<PropertyId>(i + 1)] = static_cast<double>(rng() % 1000000) / 1000.0 + 1e-6;
    }
    CHECK(std::abs(hill_diversity(m) - testing::reference_hill_diversity(m)) < 1e-10);
  }
}

TEST_CASE("hill diversity bounds, scale and permutation invariance") {
  std::mt19937_64 rng(5150);
  for (int round = 0; round < 300; ++round) {
    AbundanceMap m;
    const std::size_t keys = 1 + rng() % 50;
    for (std::size_t i = 0; i < keys; ++i) {
      m[static_cast<PropertyId>(1 + rng() % 10000)] = static_cast<double>(1 + rng() % 100000);
    }
    const double d = hill_diversity(m);
    CHECK(d >= 1.0);
    CHECK(d <= static_cast<double>(m.size()) + 1e-12);

    const double c = static_cast<double>(1 + rng() % 1000000) / 1000.0;
    AbundanceMap scaled;
    for (const auto& [k, w] : m) scaled[k] = w * c;
    CHECK(std::abs(hill_diversity(scaled) - d) < 1e-10);
  }

  // permutation invariance: relabeling keys changes nothing
  AbundanceMap a = {{1, 5.0}, {2, 1.0}, {3, 2.5}};
  AbundanceMap b = {{7, 1.0}, {8, 2.5}, {9, 5.0}};
  CHECK(hill_diversity(a) == hill_diversity(b));
}

TEST_CASE("merging two equal-weight keys strictly decreases diversity") {
  AbundanceMap split = {{1, 4.0}, {2, 4.0}, {3, 2.0}};
  AbundanceMap merged = {{1, 8.0}, {3, 2.0}};
  CHECK(hill_diversity(merged) < hill_diversity(split));
}

namespace {

FrequencyTables series_ordinal_tables() {
  // series-ordinal rows: GF(p) and F(p, P1545)
  FrequencyTables t;
  auto row = [&](PropertyId p, Count gf, Count f) {
    t.p_freq[p] = gf;
    t.p_q_freq[1545][p] = f;
    t.q_freq[1545] += f;
  };
  row(2093, 148810279, 148015200);
  row(50, 33552582, 31769610);
  row(2860, 303125156, 14782837);
  row(5572, 1058470, 1056827);
  row(179, 1003261, 745165);
  row(735, 7901359, 739798);
  row(527, 2405547, 352459);
  row(793, 1129126, 210584);
  row(4908, 172152, 170291);
  row(5753, 90169, 90169);
  row(361, 5104617, 83594);
  row(26, 830942, 79612);
  row(734, 5346143, 68516);
  row(658, 53797, 43553);
  row(710, 860972, 37559);
  return t;
}

}  // namespace

TEST_CASE("proportional frequencies divide by the global frequency") {
  const auto t = series_ordinal_tables();
  const auto pf = proportional_frequencies(1545, t);
  CHECK(std::abs(pf.at(50) - 0.947) < 0.001);
  CHECK(pf.at(5753) == 1.0);
  for (const auto& [p, v] : pf) {
    CHECK(v > 0.0);
    CHECK(v <= 1.0);
  }

  CHECK_THROWS_AS(proportional_frequencies(9999, t), QualifierNotFoundError);

  // all PF exactly 1 when F(p,q) == GF(p)
  FrequencyTables saturated;
  for (PropertyId p : {1u, 2u, 3u}) {
    saturated.p_freq[p] = 7;
    saturated.p_q_freq[77][p] = 7;
  }
  for (const auto& [p, v] : proportional_frequencies(77, saturated)) CHECK(v == 1.0);
}

TEST_CASE("proportional diversity renormalizes the PF map") {
  // uniform PF over 10 properties -> 10
  FrequencyTables uniform;
  for (PropertyId p = 1; p <= 10; ++p) {
    uniform.p_freq[p] = 100;
    uniform.p_q_freq[5][p] = 25;  // PF = 0.25 everywhere
    uniform.q_freq[5] += 25;
  }
  CHECK(std::abs(proportional_diversity(5, uniform) - 10.0) < 1e-9);

  // PF {0.9, 0.05, 0.05}: the reference value was computed with the
  // extended-precision oracle before freezing
  FrequencyTables skew;
  skew.p_freq = {{1, 100}, {2, 100}, {3, 100}};
  skew.p_q_freq[9] = {{1, 90}, {2, 5}, {3, 5}};
  skew.q_freq[9] = 100;
  const AbundanceMap pf_oracle = {{1, 0.9}, {2, 0.05}, {3, 0.05}};
  const double expected = testing::reference_hill_diversity(pf_oracle);
  CHECK(std::abs(proportional_diversity(9, skew) - expected) < 1e-12);
  CHECK(std::abs(proportional_diversity(9, skew) - 1.483) < 0.01);

  // a property with F(p,q) = 0 contributes nothing
  FrequencyTables with_zero = skew;
  with_zero.p_q_freq[9][4] = 0;
  with_zero.p_freq[4] = 50;
  CHECK(proportional_diversity(9, with_zero) == proportional_diversity(9, skew));
}

TEST_CASE("importance scores multiply frequency by proportional diversity") {
  FrequencyTables t;
  // qualifier 5: F = 1000, uniform PF over 5 properties -> diversity 5
  for (PropertyId p = 1; p <= 5; ++p) {
    t.p_freq[p] = 400;
    t.p_q_freq[5][p] = 200;
  }
  t.q_freq[5] = 1000;
  t.q_pair_freq[5] = 1000;
  // qualifier 6: F = 2, single property
  t.p_freq[99] = 10;
  t.p_q_freq[6][99] = 2;
  t.q_freq[6] = 2;
  t.q_pair_freq[6] = 2;
  t.total_qualifications = 1002;

  const auto scores = importance_scores(t);
  REQUIRE(scores.size() == 2);
  CHECK(scores[0].qualifier == 5);
  CHECK(scores[0].score == doctest::Approx(5000.0).epsilon(1e-9));
  CHECK(scores[0].rank == 1);
  CHECK(scores[1].qualifier == 6);
  CHECK(scores[1].diversity_proportional == 1.0);
  CHECK(scores[1].score == doctest::Approx(2.0));

  SUBCASE("tie on score and frequency breaks by qualifier id") {
    FrequencyTables tie;
    for (PropertyId q : {21u, 12u}) {
      tie.p_freq[1] = 100;
      tie.p_q_freq[q][1] = 50;
      tie.q_freq[q] = 50;
      tie.q_pair_freq[q] = 50;
    }
    const auto ranked = importance_scores(tie);
    REQUIRE(ranked.size() == 2);
    CHECK(ranked[0].qualifier == 12);
    CHECK(ranked[1].qualifier == 21);
    CHECK(ranked[0].rank == 1);
    CHECK(ranked[1].rank == 2);
  }
}

TEST_CASE("coverage of the top k") {
  FrequencyTables t;
  t.p_freq[1] = 100;
  t.p_q_freq[5][1] = 60;
  t.q_freq[5] = 60;
  t.q_pair_freq[5] = 70;
  t.p_q_freq[6][1] = 30;
  t.q_freq[6] = 30;
  t.q_pair_freq[6] = 30;
  t.p_q_freq[7][1] = 10;
  t.q_freq[7] = 10;
  t.q_pair_freq[7] = 10;
  t.total_qualifications = 110;

  const auto scores = importance_scores(t);
  CHECK(coverage_of_top_k(t, scores, 0) == 0.0);
  CHECK(coverage_of_top_k(t, scores, scores.size()) == doctest::Approx(1.0));
  // hand count: top 2 by score are q5 (70 pairs) and q6 (30 pairs)
  CHECK(coverage_of_top_k(t, scores, 2) == doctest::Approx(100.0 / 110.0));
  CHECK_THROWS(coverage_of_top_k(t, scores, scores.size() + 1));
}

TEST_CASE("frequency distribution thresholds and series") {
  FrequencyTables t;
  t.q_freq = {{1, 5}, {2, 500}, {3, 2000000}};
  t.p_q_freq[1] = {{9, 5}};
  t.p_q_freq[2] = {{9, 500}};
  t.p_q_freq[3] = {{9, 2000000}};

  const auto dist = frequency_distribution(t, {100, 1000000});
  CHECK(dist.total_qualifiers == 3);
  REQUIRE(dist.buckets.size() == 2);
  CHECK(dist.buckets[1].threshold == 1000000);
  CHECK(dist.buckets[1].count_above == 1);
  CHECK(dist.buckets[1].percent_above == doctest::Approx(100.0 / 3.0));
  CHECK(dist.buckets[0].count_above == 2);
  CHECK(dist.buckets[0].count_at_or_below == 1);

  REQUIRE(dist.rank_frequency.size() == 3);
  CHECK(dist.rank_frequency[0] == std::pair<std::uint32_t, Count>{1, 2000000});
  CHECK(dist.rank_frequency[2] == std::pair<std::uint32_t, Count>{3, 5});

  const auto empty = frequency_distribution(FrequencyTables{}, {10});
  CHECK(empty.total_qualifiers == 0);
  CHECK(empty.buckets[0].count_above == 0);

  CHECK_THROWS(frequency_distribution(t, {10, 10}));
  CHECK_THROWS(frequency_distribution(t, {20, 10}));
}

TEST_CASE("ranking equals a brute-force sort of independently computed scores") {
  // ~20 qualifiers with randomized per-property counts
  std::mt19937_64 rng(2024);
  FrequencyTables t;
  for (PropertyId q = 200; q < 220; ++q) {
    const std::size_t props = 1 + rng() % 6;
    Count fq = 0;
    for (std::size_t i = 0; i < props; ++i) {
      const PropertyId p = 1 + static_cast<PropertyId>(rng() % 10);
      const Count f = 1 + rng() % 500;
      t.p_q_freq[q][p] += f;
      fq += f;
    }
    t.q_freq[q] = fq;
    t.q_pair_freq[q] = fq;
  }
  // GF(p) must dominate every per-qualifier F(p,q)
  for (const auto& [q, per_p] : t.p_q_freq) {
    for (const auto& [p, f] : per_p) t.p_freq[p] = std::max(t.p_freq[p], f * 2);
  }

  struct Expected {
    PropertyId q;
    Count freq;
    double score;
  };
  std::vector<Expected> expected;
  for (const auto& [q, per_p] : t.p_q_freq) {
    AbundanceMap pf;
    for (const auto& [p, f] : per_p) pf[p] = static_cast<double>(f) / static_cast<double>(t.p_freq[p]);
    expected.push_back({q, t.q_freq[q],
                        static_cast<double>(t.q_freq[q]) * testing::reference_hill_diversity(pf)});
  }
  std::stable_sort(expected.begin(), expected.end(), [](const Expected& a, const Expected& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.freq != b.freq) return a.freq > b.freq;
    return a.q < b.q;
  });

  const auto scores = importance_scores(t);
  REQUIRE(scores.size() == expected.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    CHECK(scores[i].qualifier == expected[i].q);
    CHECK(scores[i].rank == i + 1);
    CHECK(std::abs(scores[i].score - expected[i].score) < 1e-6 * (1.0 + expected[i].score));
  }
}

TEST_CASE("score CSV is deterministic and round-trips") {
  const auto t = series_ordinal_tables();
  FrequencyTables full = t;
  full.q_pair_freq[1545] = full.q_freq[1545];
  full.total_qualifications = full.q_freq[1545];

  const auto scores = importance_scores(full);
  const auto csv1 = scores_to_csv(scores);
  const auto csv2 = scores_to_csv(importance_scores(full));
  CHECK(csv1 == csv2);

  testing::TempDir dir("scores");
  {
    std::ofstream out(dir / "scores.csv", std::ios::binary);
    out << csv1;
  }
  const auto reloaded = scores_from_csv_file(dir / "scores.csv");
  REQUIRE(reloaded.size() == scores.size());
  CHECK(reloaded[0].qualifier == scores[0].qualifier);
  CHECK(reloaded[0].frequency == scores[0].frequency);
  CHECK(reloaded[0].rank == scores[0].rank);
}
