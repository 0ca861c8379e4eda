#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace portload {

/// Inclusive span of calendar dates (UTC).
struct DateRange {
  std::chrono::year_month_day first{};
  std::chrono::year_month_day last{};

  bool ok() const { return first.ok() && last.ok() && first <= last; }
};

/// Parses "YYYY-MM-DD". Strict: zero-padded, valid calendar date.
std::optional<std::chrono::year_month_day> parse_date(std::string_view text);

/// Parses "YYYY-MM-DDTHH:MM:SSZ" (UTC, whole seconds).
std::optional<std::chrono::sys_seconds> parse_timestamp(std::string_view text);

std::string format_date(const std::chrono::year_month_day& date);
std::string format_timestamp(const std::chrono::sys_seconds& when);

/// 0 = Monday ... 6 = Sunday.
int weekday_index(std::chrono::sys_days day);

/// Number of calendar days in the range (range must be ok()).
std::uint32_t total_days(const DateRange& range);

/// How many dates of each weekday (Mon..Sun) fall inside the range.
std::array<std::uint32_t, 7> weekday_date_counts(const DateRange& range);

}  // namespace portload
