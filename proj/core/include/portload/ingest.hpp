#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "portload/calendar.hpp"
#include "portload/port_call.hpp"

namespace portload {

inline constexpr std::string_view port_call_csv_header =
    "vessel_id,vessel_type,length_m,arrival_utc";

struct ParseResult {
  std::vector<PortCall> calls;   // well-formed rows, in input order
  std::vector<RowError> errors;  // rejected rows, in input order
};

/// Reads a port-call CSV stream (LF or CRLF). Throws MissingHeaderError when
/// the first line is absent or differs from port_call_csv_header; bad rows
/// are collected in errors, never dropped silently.
ParseResult parse_port_calls(std::istream& in);

/// Writes header + rows in the same CSV dialect parse_port_calls reads.
/// parse -> serialize -> parse is a fixed point on well-formed input.
void serialize_port_calls(std::span<const PortCall> calls, std::ostream& out);

struct FilterConfig {
  DateRange window{std::chrono::year{2019} / 1 / 1,
                   std::chrono::year{2019} / 12 / 31};
  double max_length_m = 25.0;             // exclusive upper bound
  std::uint32_t min_type_frequency = 500; // inclusive lower bound

  bool ok() const { return window.ok() && max_length_m > 0.0; }
};

struct TypeFrequency {
  std::string vessel_class;
  std::size_t count = 0;
};

/// Sorted by count descending, ties by class label ascending.
using TypeFrequencyTable = std::vector<TypeFrequency>;

struct FilterResult {
  std::vector<PortCall> calls;  // survivors, original order
  TypeFrequencyTable table;     // class frequencies after all stages
};

/// Applies, in order: arrival date inside cfg.window (inclusive), then
/// length_m < cfg.max_length_m, then removal of classes whose surviving
/// call count is below cfg.min_type_frequency.
FilterResult filter_calls(std::span<const PortCall> calls,
                          const FilterConfig& cfg);

}  // namespace portload
