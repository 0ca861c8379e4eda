#pragma once

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace portload {

/// One vessel arrival event.
struct PortCall {
  std::string vessel_id;
  std::string vessel_class;
  double length_m = 0.0;
  std::chrono::sys_seconds arrival_utc{};
};

enum class RowErrorKind {
  column_count,
  empty_field,
  bad_length,
  bad_timestamp,
};

/// One rejected CSV row. line is 1-based and counts the header line.
struct RowError {
  std::size_t line = 0;
  RowErrorKind kind = RowErrorKind::column_count;
  std::string message;
};

/// First line of the input is missing or is not the expected header.
struct MissingHeaderError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace portload
