#include "portload/profiles.hpp"

#include <ostream>
#include <stdexcept>

namespace portload {

namespace {

constexpr const char* weekday_labels[7] = {"mon", "tue", "wed", "thu",
                                           "fri", "sat", "sun"};

}  // namespace

Aggregation Aggregation::weekday(int index) {
  if (index < 0 || index > 6) {
    throw std::invalid_argument("weekday index must be 0..6");
  }
  return Aggregation{index};
}

std::string Aggregation::label() const {
  return is_all_days() ? "alldays" : weekday_labels[index_];
}

std::optional<Aggregation> Aggregation::from_label(std::string_view text) {
  if (text == "alldays") return all_days();
  for (int i = 0; i < 7; ++i) {
    if (text == weekday_labels[i]) return weekday(i);
  }
  return std::nullopt;
}

ArrivalProfile build_arrival_profile(std::span<const PortCall> calls,
                                     std::string_view vessel_class,
                                     const DateRange& window,
                                     bool allow_empty) {
  using namespace std::chrono;
  ArrivalProfile profile;
  profile.vessel_class = std::string(vessel_class);
  profile.days_observed = weekday_date_counts(window);

  std::size_t matched = 0;
  for (const auto& call : calls) {
    if (call.vessel_class != vessel_class) continue;
    ++matched;
    const auto day_point = floor<days>(call.arrival_utc);
    const auto hour =
        duration_cast<hours>(call.arrival_utc - day_point).count();
    ++profile.counts[weekday_index(day_point)][hour];
  }
  if (matched == 0 && !allow_empty) {
    throw UnknownClassError(profile.vessel_class);
  }
  return profile;
}

DailyArrivalVector daily_arrival_vector(const ArrivalProfile& profile,
                                        const Aggregation& aggregation) {
  DailyArrivalVector vec;
  vec.vessel_class = profile.vessel_class;
  vec.aggregation = aggregation;

  if (aggregation.is_all_days()) {
    std::uint64_t total_dates = 0;
    for (auto d : profile.days_observed) total_dates += d;
    if (total_dates == 0) return vec;
    for (int h = 0; h < 24; ++h) {
      std::uint64_t count = 0;
      for (int d = 0; d < 7; ++d) count += profile.counts[d][h];
      vec.mean_arrivals[h] =
          static_cast<double>(count) / static_cast<double>(total_dates);
    }
  } else {
    const int d = aggregation.weekday_index();
    const auto dates = profile.days_observed[d];
    if (dates == 0) return vec;
    for (int h = 0; h < 24; ++h) {
      vec.mean_arrivals[h] = static_cast<double>(profile.counts[d][h]) /
                             static_cast<double>(dates);
    }
  }
  return vec;
}

void write_profile_csv(const ArrivalProfile& profile, std::ostream& out) {
  out << "class,dow,hour,count\n";
  for (int d = 0; d < 7; ++d) {
    for (int h = 0; h < 24; ++h) {
      if (profile.counts[d][h] == 0) continue;
      out << profile.vessel_class << ',' << d << ',' << h << ','
          << profile.counts[d][h] << '\n';
    }
  }
}

}  // namespace portload
