#include "portload/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <set>

#include "portload/numeric.hpp"

namespace portload {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

bool parse_length(std::string_view text, double& out) {
  if (text.empty()) return false;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && end == text.data() + text.size() &&
         std::isfinite(out);
}

}  // namespace

ParseResult parse_port_calls(std::istream& in) {
  ParseResult result;
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    throw MissingHeaderError("empty input, expected header '" +
                             std::string(port_call_csv_header) + "'");
  }
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::string_view header{line};
  if (header.starts_with("\xEF\xBB\xBF")) header.remove_prefix(3);
  if (header != port_call_csv_header) {
    throw MissingHeaderError("bad header '" + std::string(header) +
                             "', expected '" +
                             std::string(port_call_csv_header) + "'");
  }

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split_fields(line);
    if (fields.size() != 4) {
      result.errors.push_back({line_no, RowErrorKind::column_count,
                               "expected 4 fields, got " +
                                   std::to_string(fields.size())});
      continue;
    }
    if (fields[0].empty() || fields[1].empty()) {
      result.errors.push_back({line_no, RowErrorKind::empty_field,
                               fields[0].empty() ? "empty vessel_id"
                                                 : "empty vessel_type"});
      continue;
    }
    double length = 0.0;
    if (!parse_length(fields[2], length)) {
      result.errors.push_back({line_no, RowErrorKind::bad_length,
                               "non-numeric length '" +
                                   std::string(fields[2]) + "'"});
      continue;
    }
    if (length <= 0.0) {
      result.errors.push_back({line_no, RowErrorKind::bad_length,
                               "length must be positive, got '" +
                                   std::string(fields[2]) + "'"});
      continue;
    }
    const auto when = parse_timestamp(fields[3]);
    if (!when) {
      result.errors.push_back({line_no, RowErrorKind::bad_timestamp,
                               "unparseable timestamp '" +
                                   std::string(fields[3]) + "'"});
      continue;
    }
    result.calls.push_back(PortCall{std::string(fields[0]),
                                    std::string(fields[1]), length, *when});
  }
  return result;
}

void serialize_port_calls(std::span<const PortCall> calls, std::ostream& out) {
  out << port_call_csv_header << '\n';
  for (const auto& call : calls) {
    out << call.vessel_id << ',' << call.vessel_class << ','
        << format_double(call.length_m) << ','
        << format_timestamp(call.arrival_utc) << '\n';
  }
}

FilterResult filter_calls(std::span<const PortCall> calls,
                          const FilterConfig& cfg) {
  if (!cfg.ok()) throw std::invalid_argument("invalid filter config");
  using namespace std::chrono;
  const sys_days window_first{cfg.window.first};
  const sys_days window_last{cfg.window.last};

  // stage 1 + 2: date window, then strict length bound
  std::vector<const PortCall*> survivors;
  survivors.reserve(calls.size());
  for (const auto& call : calls) {
    const auto date = floor<days>(call.arrival_utc);
    if (date < window_first || date > window_last) continue;
    if (!(call.length_m < cfg.max_length_m)) continue;
    survivors.push_back(&call);
  }

  // stage 3: drop classes below the frequency threshold
  std::map<std::string, std::size_t> counts;
  for (const auto* call : survivors) ++counts[call->vessel_class];

  std::set<std::string> kept;
  FilterResult result;
  for (const auto& [label, count] : counts) {
    if (count >= cfg.min_type_frequency) {
      kept.insert(label);
      result.table.push_back({label, count});
    }
  }
  std::sort(result.table.begin(), result.table.end(),
            [](const TypeFrequency& a, const TypeFrequency& b) {
              if (a.count != b.count) return a.count > b.count;
              return a.vessel_class < b.vessel_class;
            });

  result.calls.reserve(survivors.size());
  for (const auto* call : survivors) {
    if (kept.contains(call->vessel_class)) result.calls.push_back(*call);
  }
  return result;
}

}  // namespace portload
