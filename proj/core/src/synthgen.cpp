#include "portload/synthgen.hpp"

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <numeric>
#include <random>
#include <stdexcept>

namespace portload {

std::vector<std::uint32_t> apportion(std::uint32_t total,
                                     std::span<const double> weights) {
  const double weight_sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (weights.empty() || !(weight_sum > 0.0)) {
    throw std::invalid_argument("weights must be nonempty with positive sum");
  }
  for (const double w : weights) {
    if (!(w >= 0.0)) throw std::invalid_argument("weights must be >= 0");
  }

  std::vector<std::uint32_t> quota(weights.size(), 0);
  std::vector<std::pair<double, std::size_t>> remainders;
  remainders.reserve(weights.size());
  std::uint64_t assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double share = static_cast<double>(total) * weights[i] / weight_sum;
    quota[i] = static_cast<std::uint32_t>(share);
    assigned += quota[i];
    remainders.emplace_back(share - static_cast<double>(quota[i]), i);
  }
  std::sort(remainders.begin(), remainders.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return a.first > b.first;
              return a.second < b.second;
            });
  for (std::uint64_t i = 0; assigned < total; ++i, ++assigned) {
    ++quota[remainders[i % remainders.size()].second];
  }
  return quota;
}

namespace {

using std::chrono::days;
using std::chrono::sys_days;

struct RawCall {
  std::string vessel_class;
  double length_m;
  std::chrono::sys_seconds arrival;
};

constexpr const char* rare_class_labels[] = {
    "Buoy tender",     "Cabin cruiser",  "Catamaran",       "Crew boat",
    "Dinghy",          "Dive vessel",    "Dredger",         "Ferry",
    "Houseboat",       "Jet ski",        "Launch",          "Longliner",
    "Motor boat",      "Patrol vessel",  "Pilot vessel",    "Pleasure craft",
    "Research vessel", "Rescue vessel",  "RIB",             "Safety vessel",
    "Speedboat",       "Supply vessel",  "Survey vessel",   "Training vessel",
    "Water taxi",      "Workboat"};

constexpr const char* oversize_class_labels[] = {
    "Cargo ship", "Cruise ship", "Naval vessel",
    "Passenger ship", "Ro-Ro", "Tanker"};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;  // raw draws only: distributions are not portable
};

double pick_length(Rng& rng, double min_m, double max_m) {
  const auto lo = static_cast<std::int64_t>(std::llround(min_m * 10.0));
  const auto hi = static_cast<std::int64_t>(std::llround(max_m * 10.0));
  return static_cast<double>(lo + static_cast<std::int64_t>(
                                      rng.below(hi - lo + 1))) /
         10.0;
}

// quota-fills (weekday, hour) cells, then scatters each cell's calls over the
// window's dates of that weekday
void emit_class(const std::string& label, std::uint32_t count,
                const std::array<double, 24>& hour_weights,
                const std::array<double, 7>& weekday_weights,
                double min_length, double max_length,
                const std::array<std::vector<sys_days>, 7>& dates_by_weekday,
                Rng& rng, std::vector<RawCall>& out) {
  std::array<double, 168> cell_weights{};
  for (int d = 0; d < 7; ++d) {
    for (int h = 0; h < 24; ++h) {
      cell_weights[d * 24 + h] = weekday_weights[d] * hour_weights[h];
    }
  }
  const auto quotas = apportion(count, cell_weights);
  for (int d = 0; d < 7; ++d) {
    const auto& dates = dates_by_weekday[d];
    for (int h = 0; h < 24; ++h) {
      const auto quota = quotas[d * 24 + h];
      if (quota > 0 && dates.empty()) {
        throw std::invalid_argument(
            "window has no dates of a weekday with positive weight");
      }
      for (std::uint32_t i = 0; i < quota; ++i) {
        const auto date = dates[rng.below(dates.size())];
        const auto when = date + std::chrono::hours{h} +
                          std::chrono::minutes{rng.below(60)} +
                          std::chrono::seconds{rng.below(60)};
        out.push_back({label, pick_length(rng, min_length, max_length), when});
      }
    }
  }
}

}  // namespace

SynthSpec default_synth_spec() {
  SynthSpec spec;

  const std::array<double, 24> commercial_fishing_hours = {
      0.5, 0.4, 0.4, 0.4, 0.6, 0.9, 1.2, 1.4, 1.4, 1.3, 1.3, 1.2,
      1.2, 1.3, 2.0, 4.5, 9.0, 9.0, 6.5, 2.5, 1.4, 0.9, 0.7, 0.6};
  const std::array<double, 7> commercial_weekdays = {1.0, 1.0, 1.0, 1.0,
                                                     1.0, 0.5, 0.5};

  spec.class_targets["Fishing vessel"] =
      ClassTarget{1655, commercial_fishing_hours, commercial_weekdays, 8.0,
                  24.9};
  spec.class_targets["Trawler"] =
      ClassTarget{553, commercial_fishing_hours, commercial_weekdays, 12.0,
                  24.9};
  spec.class_targets["Pusher/Tug"] = ClassTarget{
      1546,
      {0.3, 0.2, 0.2, 0.2, 0.3, 0.8, 2.2, 2.6, 2.4, 2.6, 2.5, 2.4,
       2.6, 2.3, 2.5, 2.4, 2.3, 2.1, 1.4, 0.7, 0.5, 0.4, 0.3, 0.3},
      {1.0, 1.0, 1.0, 1.0, 1.0, 0.55, 0.55},
      10.0,
      24.9};
  spec.class_targets["Yacht"] = ClassTarget{
      1176,
      {0.3, 0.2, 0.2, 0.2, 0.2, 0.3, 0.5, 0.7, 0.9, 1.0, 1.1, 1.3,
       2.2, 3.2, 4.4, 5.4, 6.0, 4.2, 2.6, 1.6, 1.0, 0.7, 0.5, 0.4},
      {1.0, 1.0, 1.0, 1.0, 1.2, 2.0, 2.0},
      7.0,
      24.9};
  spec.class_targets["Sailing ship"] = ClassTarget{
      2056,
      {0.3, 0.2, 0.2, 0.2, 0.2, 0.3, 0.5, 0.6, 0.8, 1.0, 1.1, 1.2,
       1.5, 2.0, 4.2, 5.6, 6.0, 4.2, 2.4, 1.5, 1.0, 0.7, 0.5, 0.4},
      {1.0, 1.0, 1.0, 1.0, 1.2, 2.2, 2.2},
      6.0,
      24.9};
  return spec;
}

std::vector<PortCall> generate(const SynthSpec& spec) {
  if (!spec.window.ok()) throw std::invalid_argument("invalid window");
  for (const auto& [label, target] : spec.class_targets) {
    if (target.count == 0) {
      throw std::invalid_argument("target count for '" + label +
                                  "' must be > 0");
    }
    if (!(target.min_length_m > 0.0) ||
        !(target.min_length_m <= target.max_length_m)) {
      throw std::invalid_argument("bad length range for '" + label + "'");
    }
  }

  Rng rng(spec.seed);

  const sys_days first{spec.window.first};
  const sys_days last{spec.window.last};
  std::vector<sys_days> all_dates;
  std::array<std::vector<sys_days>, 7> dates_by_weekday;
  for (auto d = first; d <= last; d += days{1}) {
    all_dates.push_back(d);
    dates_by_weekday[weekday_index(d)].push_back(d);
  }

  std::vector<RawCall> raw;

  for (const auto& [label, target] : spec.class_targets) {
    emit_class(label, target.count, target.hour_weights,
               target.weekday_weights, target.min_length_m,
               target.max_length_m, dates_by_weekday, rng, raw);
  }

  // filler traffic, split so every filter stage sees work:
  // oversize vessels, out-of-window dates, and low-frequency classes
  const std::uint32_t oversize_n = spec.filler / 7;
  const std::uint32_t outside_n = spec.filler / 25;
  const std::uint32_t rare_n = spec.filler - oversize_n - outside_n;

  if (rare_n > 0) {
    const std::array<double, 24> rare_hours = {
        0.4, 0.3, 0.3, 0.3, 0.4, 0.7, 1.2, 1.6, 1.8, 1.8, 1.8, 1.8,
        1.8, 1.8, 1.8, 1.8, 1.6, 1.4, 1.2, 1.0, 0.8, 0.6, 0.5, 0.4};
    const std::array<double, 7> rare_weekdays = {1.0, 1.0, 1.0, 1.0,
                                                 1.0, 0.8, 0.8};
    constexpr std::size_t n_rare = std::size(rare_class_labels);
    const std::vector<double> even(n_rare, 1.0);
    const auto per_class = apportion(rare_n, even);
    for (std::size_t i = 0; i < n_rare; ++i) {
      if (per_class[i] == 0) continue;
      emit_class(rare_class_labels[i], per_class[i], rare_hours, rare_weekdays,
                 3.0, 24.9, dates_by_weekday, rng, raw);
    }
  }

  if (oversize_n > 0) {
    constexpr std::size_t n_big = std::size(oversize_class_labels);
    const std::vector<double> even(n_big, 1.0);
    const auto per_class = apportion(oversize_n, even);
    bool first_call = true;
    for (std::size_t i = 0; i < n_big; ++i) {
      for (std::uint32_t j = 0; j < per_class[i]; ++j) {
        // pin the length boundary once: exactly at the cutoff, so the strict
        // comparison is exercised by the dataset itself
        const double length =
            first_call ? 25.0 : pick_length(rng, 25.0, 587.0);
        first_call = false;
        const auto date = all_dates[rng.below(all_dates.size())];
        const auto when = date + std::chrono::hours{rng.below(24)} +
                          std::chrono::minutes{rng.below(60)} +
                          std::chrono::seconds{rng.below(60)};
        raw.push_back({oversize_class_labels[i], length, when});
      }
    }
  }

  if (outside_n > 0) {
    std::vector<std::string> labels;
    for (const auto& [label, target] : spec.class_targets)
      labels.push_back(label);
    if (labels.empty()) labels.push_back("Workboat");
    for (std::uint32_t i = 0; i < outside_n; ++i) {
      const auto offset = days{1 + static_cast<int>(rng.below(365))};
      const auto date = (i % 2 == 0) ? first - offset : last + offset;
      const auto when = date + std::chrono::hours{rng.below(24)} +
                        std::chrono::minutes{rng.below(60)} +
                        std::chrono::seconds{rng.below(60)};
      raw.push_back({labels[i % labels.size()],
                     pick_length(rng, 4.0, 24.9), when});
    }
  }

  std::stable_sort(raw.begin(), raw.end(),
                   [](const RawCall& a, const RawCall& b) {
                     return a.arrival < b.arrival;
                   });

  std::vector<PortCall> calls;
  calls.reserve(raw.size());
  char id[24];
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::snprintf(id, sizeof id, "SYN-%06zu", i + 1);
    calls.push_back(PortCall{id, std::move(raw[i].vessel_class),
                             raw[i].length_m, raw[i].arrival});
  }
  return calls;
}

}  // namespace portload
