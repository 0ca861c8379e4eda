#include "portload/calendar.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace portload {

namespace {

bool parse_field(std::string_view text, unsigned& out) {
  if (text.empty()) return false;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && end == text.data() + text.size();
}

}  // namespace

std::optional<std::chrono::year_month_day> parse_date(std::string_view text) {
  using namespace std::chrono;
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  unsigned y = 0, m = 0, d = 0;
  if (!parse_field(text.substr(0, 4), y) || !parse_field(text.substr(5, 2), m) ||
      !parse_field(text.substr(8, 2), d)) {
    return std::nullopt;
  }
  year_month_day date{year{static_cast<int>(y)}, month{m}, day{d}};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::optional<std::chrono::sys_seconds> parse_timestamp(std::string_view text) {
  using namespace std::chrono;
  if (text.size() != 20 || text[10] != 'T' || text[13] != ':' ||
      text[16] != ':' || text[19] != 'Z') {
    return std::nullopt;
  }
  auto date = parse_date(text.substr(0, 10));
  if (!date) return std::nullopt;
  unsigned h = 0, m = 0, s = 0;
  if (!parse_field(text.substr(11, 2), h) || !parse_field(text.substr(14, 2), m) ||
      !parse_field(text.substr(17, 2), s)) {
    return std::nullopt;
  }
  if (h > 23 || m > 59 || s > 59) return std::nullopt;
  return sys_days{*date} + hours{h} + minutes{m} + seconds{s};
}

std::string format_date(const std::chrono::year_month_day& date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()),
                static_cast<unsigned>(date.day()));
  return buf;
}

std::string format_timestamp(const std::chrono::sys_seconds& when) {
  using namespace std::chrono;
  const auto day_point = floor<days>(when);
  const year_month_day date{day_point};
  const hh_mm_ss time_of_day{when - day_point};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ",
                static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()),
                static_cast<unsigned>(date.day()),
                static_cast<int>(time_of_day.hours().count()),
                static_cast<int>(time_of_day.minutes().count()),
                static_cast<int>(time_of_day.seconds().count()));
  return buf;
}

int weekday_index(std::chrono::sys_days day) {
  return static_cast<int>(std::chrono::weekday{day}.iso_encoding()) - 1;
}

std::uint32_t total_days(const DateRange& range) {
  if (!range.ok()) throw std::invalid_argument("invalid date range");
  using namespace std::chrono;
  return static_cast<std::uint32_t>(
      (sys_days{range.last} - sys_days{range.first}).count() + 1);
}

std::array<std::uint32_t, 7> weekday_date_counts(const DateRange& range) {
  const std::uint32_t n = total_days(range);
  std::array<std::uint32_t, 7> counts{};
  counts.fill(n / 7);
  const int start = weekday_index(std::chrono::sys_days{range.first});
  for (std::uint32_t i = 0; i < n % 7; ++i) {
    ++counts[(start + i) % 7];
  }
  return counts;
}

}  // namespace portload
