// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/scores.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "wdqual/csv.hpp"

namespace wdqual {

namespace {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

AbundanceMap proportional_frequencies(PropertyId q, const FrequencyTables& t) {
  auto it = t.p_q_freq.find(q);
  if (it == t.p_q_freq.end()) throw QualifierNotFoundError(q);

  AbundanceMap pf;
  for (const auto& [p, f] : it->second) {
    if (f == 0) continue;
    auto gf = t.p_freq.find(p);
    if (gf == t.p_freq.end() || gf->second == 0) {
      throw std::runtime_error("inconsistent tables: GF(" + property_key(p) + ") = 0 under F(p," +
                               property_key(q) + ") > 0");
    }
    pf.emplace(p, static_cast<double>(f) / static_cast<double>(gf->second));
  }
  if (pf.empty()) throw QualifierNotFoundError(q);
  return pf;
}

double proportional_diversity(PropertyId q, const FrequencyTables& t) {
  return hill_diversity(proportional_frequencies(q, t));
}

std::vector<DiversityScore> importance_scores(const FrequencyTables& t, bool use_raw_diversity) {
  std::vector<DiversityScore> scores;
  scores.reserve(t.p_q_freq.size());

  for (const auto& [q, per_p] : t.p_q_freq) {
    DiversityScore s;
    s.qualifier = q;
    if (auto fq = t.q_freq.find(q); fq != t.q_freq.end()) s.frequency = fq->second;

    AbundanceMap raw;
    for (const auto& [p, f] : per_p) {
      if (f > 0) raw.emplace(p, static_cast<double>(f));
    }
    if (raw.empty()) continue;
    s.qualified_property_count = raw.size();
    s.diversity_raw = hill_diversity(raw);
    s.diversity_proportional = proportional_diversity(q, t);
    s.score = static_cast<double>(s.frequency) *
              (use_raw_diversity ? s.diversity_raw : s.diversity_proportional);
    scores.push_back(s);
  }

  std::sort(scores.begin(), scores.end(), [](const DiversityScore& a, const DiversityScore& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.qualifier < b.qualifier;
  });
  for (std::size_t i = 0; i < scores.size(); ++i) scores[i].rank = static_cast<std::uint32_t>(i + 1);
  return scores;
}

double coverage_of_top_k(const FrequencyTables& t, const std::vector<DiversityScore>& scores, Count k) {
  if (k > scores.size()) throw std::invalid_argument("coverage: k exceeds score count");
  if (k == 0 || t.total_qualifications == 0) return 0.0;

  Count covered = 0;
  for (Count i = 0; i < k; ++i) {
    auto pairs = t.q_pair_freq.find(scores[i].qualifier);
    if (pairs != t.q_pair_freq.end()) covered += pairs->second;
  }
  return static_cast<double>(covered) / static_cast<double>(t.total_qualifications);
}

FrequencyDistribution frequency_distribution(const FrequencyTables& t, const std::vector<Count>& thresholds) {
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (thresholds[i] <= thresholds[i - 1]) {
      throw std::invalid_argument("thresholds must be strictly increasing");
    }
  }

  FrequencyDistribution dist;
  dist.total_qualifiers = t.q_freq.size();

  std::vector<std::pair<PropertyId, Count>> freqs(t.q_freq.begin(), t.q_freq.end());
  std::sort(freqs.begin(), freqs.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  dist.rank_frequency.reserve(freqs.size());
  for (std::size_t i = 0; i < freqs.size(); ++i) {
    dist.rank_frequency.emplace_back(static_cast<std::uint32_t>(i + 1), freqs[i].second);
  }

  const double total = static_cast<double>(dist.total_qualifiers);
  for (Count threshold : thresholds) {
    FrequencyBucket bucket;
    bucket.threshold = threshold;
    for (const auto& [q, f] : freqs) {
      if (f > threshold) {
        ++bucket.count_above;
      } else {
        ++bucket.count_at_or_below;
      }
    }
    if (total > 0) {
      bucket.percent_above = 100.0 * static_cast<double>(bucket.count_above) / total;
      bucket.percent_at_or_below = 100.0 * static_cast<double>(bucket.count_at_or_below) / total;
    }
    dist.buckets.push_back(bucket);
  }
  return dist;
}

std::string scores_to_csv(const std::vector<DiversityScore>& scores) {
  std::string out = "rank,qualifier_id,frequency,property_count,diversity_raw,diversity_proportional,score\n";
  for (const auto& s : scores) {
    out += std::to_string(s.rank);
    out += ',';
    out += property_key(s.qualifier);
    out += ',';
    out += std::to_string(s.frequency);
    out += ',';
    out += std::to_string(s.qualified_property_count);
    out += ',';
    out += format_real(s.diversity_raw);
    out += ',';
    out += format_real(s.diversity_proportional);
    out += ',';
    out += format_real(s.score);
    out += '\n';
  }
  return out;
}

std::vector<DiversityScore> scores_from_csv_file(const std::filesystem::path& file) {
  CsvReader reader(file);
  auto header = reader.next_row();
  if (!header || header->size() < 7 || (*header)[0] != "rank") {
    throw std::runtime_error(file.string() + ": not a score CSV (bad header)");
  }

  std::vector<DiversityScore> scores;
  while (auto row = reader.next_row()) {
    if (row->size() < 7) {
      throw std::runtime_error(file.string() + ": row " + std::to_string(reader.row_number()) +
                               ": expected 7 columns");
    }
    try {
      DiversityScore s;
      s.rank = static_cast<std::uint32_t>(std::stoul((*row)[0]));
      auto q = parse_property_key((*row)[1]);
      if (!q) throw std::runtime_error("bad qualifier id '" + (*row)[1] + "'");
      s.qualifier = *q;
      s.frequency = std::stoull((*row)[2]);
      s.qualified_property_count = std::stoull((*row)[3]);
      s.diversity_raw = std::stod((*row)[4]);
      s.diversity_proportional = std::stod((*row)[5]);
      s.score = std::stod((*row)[6]);
      scores.push_back(s);
    } catch (const std::exception& e) {
      throw std::runtime_error(file.string() + ": row " + std::to_string(reader.row_number()) + ": " +
                               e.what());
    }
  }
  return scores;
}

std::string rank_frequency_csv(const FrequencyDistribution& dist) {
  std::string out = "rank,frequency\n";
  for (const auto& [rank, freq] : dist.rank_frequency) {
    out += std::to_string(rank);
    out += ',';
    out += std::to_string(freq);
    out += '\n';
  }
  return out;
}

std::string freq_diversity_csv(const std::vector<DiversityScore>& scores) {
  std::string out = "qualifier_id,frequency,diversity_proportional\n";
  for (const auto& s : scores) {
    out += property_key(s.qualifier);
    out += ',';
    out += std::to_string(s.frequency);
    out += ',';
    out += format_real(s.diversity_proportional);
    out += '\n';
  }
  return out;
}

}  // namespace wdqual
