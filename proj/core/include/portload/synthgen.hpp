#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "portload/calendar.hpp"
#include "portload/port_call.hpp"

namespace portload {

/// Generation target for one vessel class.
struct ClassTarget {
  std::uint32_t count = 0;
  std::array<double, 24> hour_weights{};    // relative arrival weight per hour
  std::array<double, 7> weekday_weights{};  // Mon..Sun
  double min_length_m = 5.0;
  double max_length_m = 24.9;
};

/// Deterministic synthetic dataset: per-class call counts are met exactly
/// (weights shape the distribution, quotas fill it), plus filler traffic the
/// standard filters must remove (out-of-window dates, oversize vessels, and
/// low-frequency classes).
struct SynthSpec {
  std::uint64_t seed = 42;
  DateRange window{std::chrono::year{2019} / 1 / 1,
                   std::chrono::year{2019} / 12 / 31};
  std::map<std::string, ClassTarget> class_targets;
  std::uint32_t filler = 3038;
};

/// Five common classes with late-afternoon commercial peaks, weekend-heavy
/// leisure traffic, and quiet-but-nonzero nights.
SynthSpec default_synth_spec();

/// Splits total across weights exactly: floor of the proportional share,
/// then one extra unit per largest remainder (ties to the lower index).
std::vector<std::uint32_t> apportion(std::uint32_t total,
                                     std::span<const double> weights);

/// Pure function of spec: identical spec gives identical calls. Output is
/// sorted by arrival time; ids are sequential in file order.
std::vector<PortCall> generate(const SynthSpec& spec);

}  // namespace portload
