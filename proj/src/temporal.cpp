// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#include "wdqual/temporal.hpp"

#include <charconv>

namespace wdqual {

std::string TimeBound::str() const {
  switch (kind) {
    case Kind::NegInfinity: return "-inf";
    case Kind::PosInfinity: return "+inf";
    case Kind::At: return at.str();
  }
  return "-inf";
}

TimeOrder compare_bounds(const TimeBound& a, const TimeBound& b) {
  using K = TimeBound::Kind;
  if (a.kind == K::At && b.kind == K::At) return compare_time_points(a.at, b.at);
  if (a.kind == b.kind) return TimeOrder::Equal;
  if (a.kind == K::NegInfinity || b.kind == K::PosInfinity) return TimeOrder::Less;
  return TimeOrder::Greater;
}

TemporalContext TemporalContext::interval(TimePoint s, TimePoint e) {
  TemporalContext t;
  t.start = TimeBound::of(std::move(s));
  t.end = TimeBound::of(std::move(e));
  t.source_form = TemporalForm::StartEnd;
  return t;
}

TemporalContext TemporalContext::point(TimePoint p) {
  TemporalContext t;
  t.start = TimeBound::of(p);
  t.end = TimeBound::of(std::move(p));
  t.source_form = TemporalForm::PointInTime;
  return t;
}

TemporalContext TemporalContext::years(std::int64_t start_year, std::int64_t end_year) {
  return interval(TimePoint::of_year(start_year), TimePoint::of_year(end_year));
}

std::string TemporalContext::str() const { return "[" + start.str() + ", " + end.str() + "]"; }

bool operator==(const TemporalContext& a, const TemporalContext& b) {
  return compare_bounds(a.start, b.start) == TimeOrder::Equal &&
         compare_bounds(a.end, b.end) == TimeOrder::Equal;
}

namespace {

std::int64_t parse_integer_amount(const std::string& amount) {
  std::string_view text = amount;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw TemporalError("duration amount must be a whole number, got '" + amount + "'");
  }
  return value;
}

// Distinct-value detection honoring precision: two spellings of the
// same instant are no conflict.
bool same_instant(const TimePoint& a, const TimePoint& b) {
  return compare_time_points(a, b) == TimeOrder::Equal;
}

}  // namespace

TimePoint add_duration(const TimePoint& start, std::int64_t amount, std::uint64_t unit_item) {
  TimePoint out = start;
  const int precision = start.effective_precision();

  if (unit_item == kUnitYear) {
    if (precision < kPrecisionYear) throw TemporalError("start time too coarse for a year duration");
    out.year += amount;
  } else if (unit_item == kUnitMonth) {
    if (precision < kPrecisionMonth) throw TemporalError("start time too coarse for a month duration");
    const std::int64_t months = out.year * 12 + static_cast<std::int64_t>(*out.month) - 1 + amount;
    std::int64_t y = months / 12;
    std::int64_t m = months % 12;
    if (m < 0) {
      m += 12;
      --y;
    }
    out.year = y;
    out.month = static_cast<unsigned>(m + 1);
    if (out.day) {
      const unsigned last = last_day_of_month(out.year, *out.month);
      if (*out.day > last) out.day = last;
    }
  } else if (unit_item == kUnitDay) {
    if (precision < kPrecisionDay) throw TemporalError("start time too coarse for a day duration");
    std::int64_t z = days_from_civil(out.year, *out.month, *out.day) + amount;
    std::int64_t y;
    unsigned m, d;
    civil_from_days(z, y, m, d);
    out.year = y;
    out.month = m;
    out.day = d;
  } else {
    throw TemporalError("unsupported duration unit Q" + std::to_string(unit_item) +
                        " (year, month and day durations are supported)");
  }
  return out;
}

TemporalContext normalize_temporal(const std::vector<std::pair<PropertyId, SnakValue>>& pairs) {
  std::optional<TimePoint> start, end, point;
  std::optional<std::pair<std::int64_t, std::uint64_t>> duration;  // amount, unit

  auto take_time = [](std::optional<TimePoint>& slot, const SnakValue& value, const char* what) {
    if (!value.is_time()) return;  // novalue/somevalue or dirty data; not an interval bound
    if (slot && !same_instant(*slot, value.time_point())) {
      throw TemporalError(std::string("inconsistent temporal qualifiers: conflicting ") + what);
    }
    if (!slot) slot = value.time_point();
  };

  for (const auto& [qualifier, value] : pairs) {
    switch (qualifier) {
      case kStartTime: take_time(start, value, "start time"); break;
      case kEndTime: take_time(end, value, "end time"); break;
      case kPointInTime: take_time(point, value, "point in time"); break;
      case kDuration: {
        if (!value.is_quantity()) break;
        const auto& q = value.quantity_value();
        auto parsed = std::make_pair(parse_integer_amount(q.amount), q.unit.numeric_id());
        if (duration && *duration != parsed) {
          throw TemporalError("inconsistent temporal qualifiers: conflicting duration");
        }
        duration = parsed;
        break;
      }
      default:
        // valid-in-period and other temporal qualifiers are item-valued
        // and cannot be resolved to concrete dates here
        break;
    }
  }

  if (point) {
    if (start || end || duration) {
      throw TemporalError("inconsistent temporal qualifiers: point in time combined with an interval");
    }
    return TemporalContext::point(*point);
  }

  if (duration) {
    if (!start) throw TemporalError("inconsistent temporal qualifiers: duration without start time");
    TimePoint computed_end = add_duration(*start, duration->first, duration->second);
    if (compare_time_points(*start, computed_end) == TimeOrder::Greater) {
      throw TemporalError("inconsistent temporal qualifiers: negative duration");
    }
    if (end && !same_instant(*end, computed_end)) {
      throw TemporalError("inconsistent temporal qualifiers: end time disagrees with start + duration");
    }
    TemporalContext t;
    t.start = TimeBound::of(*start);
    t.end = TimeBound::of(std::move(computed_end));
    t.source_form = TemporalForm::StartDuration;
    return t;
  }

  TemporalContext t;
  if (start) t.start = TimeBound::of(*start);
  if (end) t.end = TimeBound::of(*end);
  t.source_form = (start || end) ? TemporalForm::StartEnd : TemporalForm::Unspecified;
  if (compare_bounds(t.start, t.end) == TimeOrder::Greater) {
    throw TemporalError("inconsistent temporal qualifiers: end before start");
  }
  return t;
}

Ternary ternary_and(Ternary a, Ternary b) {
  if (a == Ternary::False || b == Ternary::False) return Ternary::False;
  if (a == Ternary::Unknown || b == Ternary::Unknown) return Ternary::Unknown;
  return Ternary::True;
}

namespace {

Ternary less_or_equal(const TimeBound& a, const TimeBound& b) {
  switch (compare_bounds(a, b)) {
    case TimeOrder::Less:
    case TimeOrder::Equal:
      return Ternary::True;
    case TimeOrder::Greater:
      return Ternary::False;
    default:
      return Ternary::Unknown;
  }
}

}  // namespace

Ternary temporal_intersects(const TemporalContext& t1, const TemporalContext& t2) {
  // closed intervals: overlap iff s1 <= e2 and s2 <= e1
  return ternary_and(less_or_equal(t1.start, t2.end), less_or_equal(t2.start, t1.end));
}

TemporalIntersection temporal_intersection(const TemporalContext& t1, const TemporalContext& t2) {
  if (t1.is_unspecified()) return TemporalIntersection::of(t2);
  if (t2.is_unspecified()) return TemporalIntersection::of(t1);

  switch (temporal_intersects(t1, t2)) {
    case Ternary::False: return TemporalIntersection::empty();
    case Ternary::Unknown: return TemporalIntersection::unknown();
    default: break;
  }

  const auto start_order = compare_bounds(t1.start, t2.start);
  const auto end_order = compare_bounds(t1.end, t2.end);
  if (start_order == TimeOrder::Unknown || end_order == TimeOrder::Unknown) {
    return TemporalIntersection::unknown();
  }

  TemporalContext out;
  out.start = start_order == TimeOrder::Less ? t2.start : t1.start;   // the later start
  out.end = end_order == TimeOrder::Greater ? t2.end : t1.end;        // the earlier end
  if (out.start.is_finite() && out.end.is_finite() &&
      compare_bounds(out.start, out.end) == TimeOrder::Equal) {
    out.source_form = TemporalForm::PointInTime;
  } else if (out.start.kind == TimeBound::Kind::NegInfinity &&
             out.end.kind == TimeBound::Kind::PosInfinity) {
    out.source_form = TemporalForm::Unspecified;
  } else {
    out.source_form = TemporalForm::StartEnd;
  }
  return TemporalIntersection::of(out);
}

}  // namespace wdqual
