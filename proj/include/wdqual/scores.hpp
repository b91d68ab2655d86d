// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "wdqual/diversity.hpp"
#include "wdqual/frequency_tables.hpp"

namespace wdqual {

struct QualifierNotFoundError : std::invalid_argument {
  explicit QualifierNotFoundError(PropertyId q)
      : std::invalid_argument("qualifier not found: " + property_key(q)) {}
};

// Per-qualifier importance record. diversity_raw is the effective
// property count over F(p,q); diversity_proportional is the same index
// over PF(p,q) = F(p,q)/GF(p), which stops one dominant property from
// masking broad use. score = frequency x diversity_proportional.
struct DiversityScore {
  PropertyId qualifier = 0;
  Count frequency = 0;              // F(q)
  Count qualified_property_count = 0;  // |P(q)|
  double diversity_raw = 1.0;
  double diversity_proportional = 1.0;
  double score = 0.0;
  std::uint32_t rank = 0;
};

// PF(p,q) for every p in P(q). Values lie in (0,1]. Throws
// QualifierNotFoundError for unknown q and a runtime error when the
// tables are inconsistent (GF(p) = 0 under F(p,q) > 0).
AbundanceMap proportional_frequencies(PropertyId q, const FrequencyTables& t);

// Hill diversity over PF(p,q). PF values are not a distribution (their
// sum routinely exceeds 1), so they are renormalized inside the entropy;
// only the relative proportions matter.
double proportional_diversity(PropertyId q, const FrequencyTables& t);

// One record per admissible qualifier, sorted by score descending, ties
// by frequency descending then qualifier id ascending; ranks 1..N.
// With use_raw_diversity the score uses diversity_raw instead (a
// sensitivity-analysis switch).
std::vector<DiversityScore> importance_scores(const FrequencyTables& t, bool use_raw_diversity = false);

// Fraction of all qualifier-value pairs whose qualifier ranks in the
// top k. k = 0 yields 0.
double coverage_of_top_k(const FrequencyTables& t, const std::vector<DiversityScore>& scores, Count k);

struct FrequencyBucket {
  Count threshold = 0;
  Count count_above = 0;
  double percent_above = 0.0;
  Count count_at_or_below = 0;
  double percent_at_or_below = 0.0;
};

struct FrequencyDistribution {
  Count total_qualifiers = 0;
  std::vector<FrequencyBucket> buckets;
  // full rank -> frequency series (frequency descending)
  std::vector<std::pair<std::uint32_t, Count>> rank_frequency;
};

// Threshold summary plus the full rank/frequency series. Thresholds must
// be strictly increasing.
FrequencyDistribution frequency_distribution(const FrequencyTables& t, const std::vector<Count>& thresholds);

// q-diversity-score.csv: rank,qualifier_id,frequency,property_count,
// diversity_raw,diversity_proportional,score. Reals carry 6 decimals,
// '.' separator, \n endings, no BOM.
std::string scores_to_csv(const std::vector<DiversityScore>& scores);
std::vector<DiversityScore> scores_from_csv_file(const std::filesystem::path& file);

std::string rank_frequency_csv(const FrequencyDistribution& dist);
std::string freq_diversity_csv(const std::vector<DiversityScore>& scores);

}  // namespace wdqual
