// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/time_point.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace wdqual {

namespace {

// Floor division, needed because truncation rounds toward zero for
// negative (BCE) years.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t year_granularity(int precision) {
  // precision 9 -> 1 year, 8 -> decade, ..., 0 -> 1e9 years
  std::int64_t g = 1;
  for (int p = precision; p < kPrecisionYear; ++p) g *= 10;
  return g;
}

}  // namespace

TimePoint TimePoint::of_year(std::int64_t y) {
  TimePoint t;
  t.year = y;
  t.precision = kPrecisionYear;
  return t;
}

TimePoint TimePoint::of_month(std::int64_t y, unsigned m) {
  TimePoint t;
  t.year = y;
  t.month = m;
  t.precision = kPrecisionMonth;
  return t;
}

TimePoint TimePoint::of_day(std::int64_t y, unsigned m, unsigned d) {
  TimePoint t;
  t.year = y;
  t.month = m;
  t.day = d;
  t.precision = kPrecisionDay;
  return t;
}

int TimePoint::effective_precision() const {
  int deepest = kPrecisionYear;
  if (month) {
    deepest = kPrecisionMonth;
    if (day) {
      deepest = kPrecisionDay;
      if (hour) {
        deepest = 12;
        if (minute) {
          deepest = 13;
          if (second) deepest = kPrecisionSecond;
        }
      }
    }
  }
  return precision < deepest ? precision : deepest;
}

std::string TimePoint::str() const {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%s%04lld-%02u-%02uT%02u:%02u:%02uZ",
                year < 0 ? "-" : "+",
                static_cast<long long>(year < 0 ? -year : year),
                month.value_or(0), day.value_or(0),
                hour.value_or(0), minute.value_or(0), second.value_or(0));
  return buf;
}

TimeOrder compare_time_points(const TimePoint& a, const TimePoint& b) {
  const int pa = a.effective_precision();
  const int pb = b.effective_precision();
  const int p = pa < pb ? pa : pb;

  if (p <= kPrecisionYear) {
    const std::int64_t g = year_granularity(p);
    const std::int64_t ya = floor_div(a.year, g);
    const std::int64_t yb = floor_div(b.year, g);
    if (ya < yb) return TimeOrder::Less;
    if (ya > yb) return TimeOrder::Greater;
    return pa == pb ? TimeOrder::Equal : TimeOrder::Unknown;
  }

  if (a.year != b.year) return a.year < b.year ? TimeOrder::Less : TimeOrder::Greater;
  const std::array<std::pair<unsigned, unsigned>, 5> fields = {{
      {a.month.value_or(0), b.month.value_or(0)},
      {a.day.value_or(0), b.day.value_or(0)},
      {a.hour.value_or(0), b.hour.value_or(0)},
      {a.minute.value_or(0), b.minute.value_or(0)},
      {a.second.value_or(0), b.second.value_or(0)},
  }};
  for (int level = kPrecisionMonth; level <= p; ++level) {
    const auto& [fa, fb] = fields[static_cast<std::size_t>(level - kPrecisionMonth)];
    if (fa != fb) return fa < fb ? TimeOrder::Less : TimeOrder::Greater;
  }
  return pa == pb ? TimeOrder::Equal : TimeOrder::Unknown;
}

std::optional<TimePoint> parse_dump_time(std::string_view text, int precision, std::string_view calendar_uri) {
  // "+1960-03-01T12:30:05Z"; year may have any number of digits.
  if (text.size() < 2 || (text.front() != '+' && text.front() != '-')) return std::nullopt;
  const bool negative = text.front() == '-';
  std::size_t pos = 1;

  auto read_uint = [&](std::size_t digits_min, char terminator, std::uint64_t& out) -> bool {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos - start < digits_min) return false;
    auto res = std::from_chars(text.data() + start, text.data() + pos, out);
    if (res.ec != std::errc()) return false;
    if (terminator != '\0') {
      if (pos >= text.size() || text[pos] != terminator) return false;
      ++pos;
    }
    return true;
  };

  std::uint64_t y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
  if (!read_uint(1, '-', y)) return std::nullopt;
  if (!read_uint(1, '-', mo)) return std::nullopt;
  if (!read_uint(1, 'T', d)) return std::nullopt;
  if (!read_uint(1, ':', h)) return std::nullopt;
  if (!read_uint(1, ':', mi)) return std::nullopt;
  if (!read_uint(1, '\0', s)) return std::nullopt;
  // trailing "Z" (or timezone, which dumps do not use) is ignored

  TimePoint t;
  t.year = negative ? -static_cast<std::int64_t>(y) : static_cast<std::int64_t>(y);
  if (mo >= 1 && mo <= 12) {
    t.month = static_cast<unsigned>(mo);
    if (d >= 1 && d <= 31) {
      t.day = static_cast<unsigned>(d);
      t.hour = static_cast<unsigned>(h);
      t.minute = static_cast<unsigned>(mi);
      t.second = static_cast<unsigned>(s);
    }
  }
  t.precision = precision;

  if (auto slash = calendar_uri.rfind('/'); slash != std::string_view::npos) {
    if (auto id = EntityId::parse(calendar_uri.substr(slash + 1))) t.calendar = *id;
  } else if (!calendar_uri.empty()) {
    if (auto id = EntityId::parse(calendar_uri)) t.calendar = *id;
  }
  return t;
}

// Algorithms from Howard Hinnant's chrono date notes.
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = floor_div(y, 400);
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = floor_div(z, 146097);
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y += m <= 2;
}

unsigned last_day_of_month(std::int64_t y, unsigned m) {
  static constexpr unsigned kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2) {
    const bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    return leap ? 29 : 28;
  }
  return kDays[m - 1];
}

}  // namespace wdqual
