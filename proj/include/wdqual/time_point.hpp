// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "wdqual/entity_id.hpp"

namespace wdqual {

// Dump precision codes: 0 = billion years ... 6 = millennium, 7 = century,
// 8 = decade, 9 = year, 10 = month, 11 = day, 12 = hour, 13 = minute,
// 14 = second.
inline constexpr int kPrecisionYear = 9;
inline constexpr int kPrecisionMonth = 10;
inline constexpr int kPrecisionDay = 11;
inline constexpr int kPrecisionSecond = 14;

// A calendar instant at some precision, as encoded in dump time snaks
// ("+1960-00-00T00:00:00Z", precision 9). Year may be negative (BCE).
// Fields beyond the stated precision are ignored by comparisons.
struct TimePoint {
  std::int64_t year = 0;
  std::optional<unsigned> month;   // 1-12; dump "00" means unspecified
  std::optional<unsigned> day;     // 1-31; dump "00" means unspecified
  std::optional<unsigned> hour;
  std::optional<unsigned> minute;
  std::optional<unsigned> second;
  int precision = kPrecisionYear;
  EntityId calendar;

  static TimePoint of_year(std::int64_t y);
  static TimePoint of_month(std::int64_t y, unsigned m);
  static TimePoint of_day(std::int64_t y, unsigned m, unsigned d);

  // Stated precision clamped to the deepest component actually present,
  // so a nominally day-precise value with month "00" compares as a year.
  int effective_precision() const;

  // Dump form: "+1960-03-00T00:00:00Z". Components beyond the effective
  // precision are rendered as zero.
  std::string str() const;
};

enum class TimeOrder { Less, Equal, Greater, Unknown };

// Compares at the coarser of the two effective precisions. Values that
// agree on every compared component are Equal only when the precisions
// match; otherwise the finer value lies somewhere inside the coarser
// one's span and the order is Unknown.
TimeOrder compare_time_points(const TimePoint& a, const TimePoint& b);

// Parses the dump "time" string. Returns nullopt on malformed input.
std::optional<TimePoint> parse_dump_time(std::string_view text, int precision, std::string_view calendar_uri);

// Civil date arithmetic (proleptic Gregorian), used for duration offsets.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d);
void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d);
unsigned last_day_of_month(std::int64_t y, unsigned m);

}  // namespace wdqual
