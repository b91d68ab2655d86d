// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wdqual Authors

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wdqual/entity_id.hpp"
#include "wdqual/snak.hpp"
#include "wdqual/time_point.hpp"

namespace wdqual {

// Temporal-category qualifier roles.
inline constexpr PropertyId kStartTime = 580;
inline constexpr PropertyId kEndTime = 582;
inline constexpr PropertyId kPointInTime = 585;
inline constexpr PropertyId kDuration = 2047;
inline constexpr PropertyId kValidInPeriod = 1264;

// Duration units supported for start+duration intervals. Sub-day units
// are rejected; statement-level temporal qualifiers do not go finer.
inline constexpr std::uint64_t kUnitYear = 577;
inline constexpr std::uint64_t kUnitMonth = 5151;
inline constexpr std::uint64_t kUnitDay = 573;

struct TimeBound {
  enum class Kind { NegInfinity, At, PosInfinity };

  Kind kind = Kind::NegInfinity;
  TimePoint at;  // valid when kind == At

  static TimeBound neg_infinity() { return {Kind::NegInfinity, {}}; }
  static TimeBound pos_infinity() { return {Kind::PosInfinity, {}}; }
  static TimeBound of(TimePoint t) { return {Kind::At, std::move(t)}; }

  bool is_finite() const { return kind == Kind::At; }
  std::string str() const;
};

// Order over bounds; At-vs-At falls back to precision-aware TimePoint
// comparison and can be Unknown.
TimeOrder compare_bounds(const TimeBound& a, const TimeBound& b);

enum class TemporalForm { StartEnd, StartDuration, PointInTime, Unspecified };

// The validity interval of a statement: [start, end], closed on both
// sides, with missing ends open to infinity. source_form records how the
// interval was expressed and does not take part in equality.
struct TemporalContext {
  TimeBound start = TimeBound::neg_infinity();
  TimeBound end = TimeBound::pos_infinity();
  TemporalForm source_form = TemporalForm::Unspecified;

  static TemporalContext unspecified() { return {}; }
  static TemporalContext interval(TimePoint s, TimePoint e);
  static TemporalContext point(TimePoint t);
  static TemporalContext years(std::int64_t start_year, std::int64_t end_year);

  bool is_unspecified() const {
    return start.kind == TimeBound::Kind::NegInfinity && end.kind == TimeBound::Kind::PosInfinity;
  }
  std::string str() const;
};

bool operator==(const TemporalContext& a, const TemporalContext& b);

struct TemporalError : std::runtime_error {
  explicit TemporalError(const std::string& what) : std::runtime_error(what) {}
};

// Builds the interval from temporal-category qualifier pairs:
//   start/end          -> [s, e]
//   start + duration   -> [s, s + d]
//   point in time      -> [t, t]
//   nothing            -> (-inf, +inf)
// Missing start/end fall to the infinities. Conflicting spellings
// (distinct points, duration disagreeing with an explicit end, end
// before start) raise TemporalError.
TemporalContext normalize_temporal(const std::vector<std::pair<PropertyId, SnakValue>>& pairs);

enum class Ternary { False, True, Unknown };

Ternary ternary_and(Ternary a, Ternary b);

// True iff max(start1, start2) <= min(end1, end2). Bounds that compare
// Unknown (precision boundary ties) make the answer Unknown rather than
// silently asserting an overlap.
Ternary temporal_intersects(const TemporalContext& t1, const TemporalContext& t2);

struct TemporalIntersection {
  enum class Status { NonEmpty, Empty, Unknown };
  Status status = Status::Empty;
  TemporalContext value;  // valid when status == NonEmpty

  static TemporalIntersection empty() { return {Status::Empty, {}}; }
  static TemporalIntersection unknown() { return {Status::Unknown, {}}; }
  static TemporalIntersection of(TemporalContext t) { return {Status::NonEmpty, std::move(t)}; }
};

// [max(s1,s2), min(e1,e2)] when the contexts overlap; Empty otherwise;
// Unknown when a precision tie hides the answer. Unspecified is the
// identity.
TemporalIntersection temporal_intersection(const TemporalContext& t1, const TemporalContext& t2);

// start + n units, clamping day-of-month where the target month is
// shorter. Throws TemporalError for unsupported units and for durations
// finer than the start's precision.
TimePoint add_duration(const TimePoint& start, std::int64_t amount, std::uint64_t unit_item);

}  // namespace wdqual
