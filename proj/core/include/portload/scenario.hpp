#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "portload/charging.hpp"
#include "portload/profiles.hpp"

namespace portload {

enum class ChargeMode { slow, rapid };

std::string_view to_string(ChargeMode mode);

/// How one vessel class charges: mode, profile, and how many full sessions
/// each arrival triggers (fractional values model partial top-ups).
struct ChargePolicy {
  std::string vessel_class;
  ChargeMode mode = ChargeMode::slow;
  ChargingProfile profile = slow_charging_default();
  double sessions_per_arrival = 1.0;
};

/// Built-in policies for the five common classes: trawlers, fishing vessels,
/// yachts and sailing ships recharge fully on slow chargers after returning;
/// pushers/tugs rapid-charge on every return.
std::map<std::string, ChargePolicy> default_policies();

struct ScenarioConfig {
  std::map<std::string, double> adoption;           // class -> fraction [0,1]
  std::map<std::string, ChargePolicy> policies;     // must cover adoption
  Aggregation aggregation = Aggregation::all_days();
};

/// 24-hour demand, per class and summed. Demand is average power per hour
/// slot in kW (numerically the slot's energy in kWh).
struct DemandCurve {
  std::map<std::string, std::array<double, 24>> per_class;
  std::array<double, 24> total{};
  double peak_kw = 0.0;
  std::vector<int> peak_slots;  // full argmax set, ascending
};

struct MissingVectorError : std::runtime_error {
  explicit MissingVectorError(const std::string& vessel_class)
      : std::runtime_error("no arrival vector for scenario class '" +
                           vessel_class + "'"),
        vessel_class(vessel_class) {}
  std::string vessel_class;
};

/// Expected-value demand of one class: every mean arrival in slot s starts
/// fraction * sessions_per_arrival sessions at the top of slot s.
std::array<double, 24> class_demand(const DailyArrivalVector& arrivals,
                                    const ChargePolicy& policy,
                                    double fraction);

/// Superposes all adopted classes. Per-slot totals are exact sums of the
/// per-class curves (single final rounding), so results do not depend on
/// class order. Throws MissingVectorError when an adopted class has no
/// arrival vector.
DemandCurve total_demand(
    const ScenarioConfig& cfg,
    const std::map<std::string, DailyArrivalVector>& vectors);

/// Maximum value and the full argmax set (ascending slot order).
std::pair<double, std::vector<int>> peak(const std::array<double, 24>& curve);

// ---------------------------------------------------------------------------
// Scenario files: line-oriented "key = value" text.
//
//   adoption.<class> = <fraction>     adoption.* applies to every class
//   mode.<class>     = slow|rapid     mode.* likewise
//   slow.rated_kw / slow.t1_h / slow.t2_h
//   rapid.rated_kw / rapid.t1_h / rapid.t2_h
//   aggregation      = alldays|mon|tue|wed|thu|fri|sat|sun
//
// Blank lines and lines starting with '#' are ignored. Unknown keys are an
// error.
// ---------------------------------------------------------------------------

struct ScenarioParseError : std::runtime_error {
  ScenarioParseError(std::size_t line, const std::string& what)
      : std::runtime_error("scenario line " + std::to_string(line) + ": " +
                           what),
        line(line) {}
  std::size_t line = 0;
};

/// Parsed scenario text, before class resolution.
struct ScenarioSpec {
  std::map<std::string, double> adoption;
  std::optional<double> adoption_all;
  std::map<std::string, ChargeMode> modes;
  std::optional<ChargeMode> mode_all;
  ChargingProfile slow = slow_charging_default();
  ChargingProfile rapid = rapid_charging_default();
  Aggregation aggregation = Aggregation::all_days();
};

ScenarioSpec parse_scenario(std::istream& in);

/// Expands wildcards over the classes present in the dataset and attaches a
/// policy to every adopted class (explicit mode, wildcard mode, or built-in
/// default). Throws std::runtime_error when a class ends up without one.
ScenarioConfig make_scenario_config(const ScenarioSpec& spec,
                                    std::span<const std::string> classes);

}  // namespace portload
