#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tmotif {

/// Integer days since 1970-01-01. Negative values are dates before the epoch.
using Day = std::int64_t;

inline constexpr Day kDaysPerYear = 365;

/// Parses a strict `YYYY-MM-DD` date. Throws std::invalid_argument on malformed
/// or out-of-calendar input.
Day parse_iso_date(std::string_view text);

std::string format_iso_date(Day day);

/// Duration strings used by thresholds and padding windows:
///   `<n>y`  n * 365 days
///   `<n>m`  floor(n * 30.417) days
///   `<n>d`  n days
///   `<n>`   n days
///   `inf` / `unbounded`  no bound (returns std::nullopt)
/// Throws std::invalid_argument for anything else, including negative values.
std::optional<Day> parse_duration(std::string_view text);

/// Like parse_duration but rejects unbounded values.
Day parse_finite_duration(std::string_view text);

inline double days_to_years(double days) { return days / static_cast<double>(kDaysPerYear); }

}  // namespace tmotif
