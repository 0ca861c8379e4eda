#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "portload/calendar.hpp"
#include "portload/port_call.hpp"

namespace portload {

/// Which slice of the week a daily arrival vector averages over: the whole
/// window, or only the dates falling on one weekday.
class Aggregation {
 public:
  static Aggregation all_days() { return Aggregation{-1}; }
  static Aggregation weekday(int index);  // 0 = Monday ... 6 = Sunday

  bool is_all_days() const { return index_ < 0; }
  int weekday_index() const { return index_; }  // -1 for all days

  std::string label() const;  // "alldays", "mon", ... "sun"
  static std::optional<Aggregation> from_label(std::string_view text);

  friend bool operator==(const Aggregation&, const Aggregation&) = default;

 private:
  explicit Aggregation(int index) : index_(index) {}
  int index_;
};

/// Per-class arrival counts binned by weekday and hour of day, plus the
/// number of calendar dates of each weekday inside the observation window.
struct ArrivalProfile {
  std::string vessel_class;
  std::array<std::array<std::uint32_t, 24>, 7> counts{};  // [weekday][hour]
  std::array<std::uint32_t, 7> days_observed{};
};

/// Expected arrivals per hour slot of one representative day.
struct DailyArrivalVector {
  std::string vessel_class;
  std::array<double, 24> mean_arrivals{};
  Aggregation aggregation = Aggregation::all_days();
};

struct UnknownClassError : std::runtime_error {
  explicit UnknownClassError(const std::string& vessel_class)
      : std::runtime_error("no port calls for vessel class '" + vessel_class +
                           "'"),
        vessel_class(vessel_class) {}
  std::string vessel_class;
};

/// Bins calls of one class. The hour is the floor of the arrival minute;
/// weeks start on Monday. Throws UnknownClassError when no call carries the
/// label unless allow_empty is set.
ArrivalProfile build_arrival_profile(std::span<const PortCall> calls,
                                     std::string_view vessel_class,
                                     const DateRange& window,
                                     bool allow_empty = false);

/// All-days: mean over every date in the window. Weekday(d): mean over the
/// dates of that weekday only. A weekday with no observed dates yields zeros.
DailyArrivalVector daily_arrival_vector(const ArrivalProfile& profile,
                                        const Aggregation& aggregation);

/// Inspection export: header "class,dow,hour,count", one row per nonzero
/// cell, sorted by (dow, hour).
void write_profile_csv(const ArrivalProfile& profile, std::ostream& out);

}  // namespace portload
