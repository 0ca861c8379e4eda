#include "portload/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>

#include "portload/numeric.hpp"

namespace portload {

namespace {

std::string_view trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

bool parse_number(std::string_view text, double& out) {
  if (text.empty()) return false;
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc{} && end == text.data() + text.size() &&
         std::isfinite(out);
}

void check_policy(const ChargePolicy& policy) {
  if (!policy.profile.ok()) {
    throw std::invalid_argument("invalid charging profile for class '" +
                                policy.vessel_class + "'");
  }
  if (!(policy.sessions_per_arrival >= 0.0) ||
      !std::isfinite(policy.sessions_per_arrival)) {
    throw std::invalid_argument("sessions_per_arrival must be >= 0");
  }
}

}  // namespace

std::string_view to_string(ChargeMode mode) {
  return mode == ChargeMode::slow ? "slow" : "rapid";
}

std::map<std::string, ChargePolicy> default_policies() {
  std::map<std::string, ChargePolicy> policies;
  for (const char* label :
       {"Fishing vessel", "Trawler", "Yacht", "Sailing ship"}) {
    policies[label] =
        ChargePolicy{label, ChargeMode::slow, slow_charging_default(), 1.0};
  }
  policies["Pusher/Tug"] = ChargePolicy{"Pusher/Tug", ChargeMode::rapid,
                                        rapid_charging_default(), 1.0};
  return policies;
}

std::array<double, 24> class_demand(const DailyArrivalVector& arrivals,
                                    const ChargePolicy& policy,
                                    double fraction) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw std::invalid_argument("adoption fraction must be in [0,1]");
  }
  check_policy(policy);

  const auto base = hourly_energy_vector(policy.profile, 0).energy_kwh_by_slot;
  const double scale = fraction * policy.sessions_per_arrival;

  std::array<double, 24> demand{};
  std::array<double, 24> terms{};
  for (int h = 0; h < 24; ++h) {
    for (int s = 0; s < 24; ++s) {
      terms[s] = arrivals.mean_arrivals[s] * base[(h - s + 24) % 24];
    }
    demand[h] = scale * exact_sum(terms);
  }
  return demand;
}

DemandCurve total_demand(
    const ScenarioConfig& cfg,
    const std::map<std::string, DailyArrivalVector>& vectors) {
  DemandCurve curve;
  for (const auto& [label, fraction] : cfg.adoption) {
    const auto policy = cfg.policies.find(label);
    if (policy == cfg.policies.end()) {
      throw std::invalid_argument("no charge policy for class '" + label +
                                  "'");
    }
    const auto vec = vectors.find(label);
    if (vec == vectors.end()) throw MissingVectorError(label);
    if (!(vec->second.aggregation == cfg.aggregation)) {
      throw std::invalid_argument(
          "arrival vector aggregation does not match scenario for class '" +
          label + "'");
    }
    curve.per_class[label] = class_demand(vec->second, policy->second,
                                          fraction);
  }

  std::vector<double> column(curve.per_class.size());
  for (int h = 0; h < 24; ++h) {
    std::size_t i = 0;
    for (const auto& [label, demand] : curve.per_class) column[i++] = demand[h];
    curve.total[h] = exact_sum(column);
  }
  std::tie(curve.peak_kw, curve.peak_slots) = peak(curve.total);
  return curve;
}

std::pair<double, std::vector<int>> peak(const std::array<double, 24>& curve) {
  const double top = *std::max_element(curve.begin(), curve.end());
  std::vector<int> slots;
  for (int h = 0; h < 24; ++h) {
    if (curve[h] == top) slots.push_back(h);
  }
  return {top, slots};
}

ScenarioSpec parse_scenario(std::istream& in) {
  ScenarioSpec spec;
  std::string line;
  std::size_t line_no = 0;

  const auto parse_fraction = [&](std::string_view value) {
    double f = 0.0;
    if (!parse_number(value, f) || f < 0.0 || f > 1.0) {
      throw ScenarioParseError(line_no, "adoption fraction must be in [0,1], got '" +
                                            std::string(value) + "'");
    }
    return f;
  };
  const auto parse_mode = [&](std::string_view value) {
    if (value == "slow") return ChargeMode::slow;
    if (value == "rapid") return ChargeMode::rapid;
    throw ScenarioParseError(line_no, "mode must be slow or rapid, got '" +
                                          std::string(value) + "'");
  };
  const auto parse_param = [&](std::string_view value) {
    double v = 0.0;
    if (!parse_number(value, v)) {
      throw ScenarioParseError(line_no, "expected a number, got '" +
                                            std::string(value) + "'");
    }
    return v;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;

    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw ScenarioParseError(line_no, "expected 'key = value'");
    }
    const auto key = trim(text.substr(0, eq));
    const auto value = trim(text.substr(eq + 1));
    if (key.empty()) throw ScenarioParseError(line_no, "empty key");

    if (key.starts_with("adoption.")) {
      const auto label = std::string(key.substr(9));
      const double fraction = parse_fraction(value);
      if (label == "*") {
        spec.adoption_all = fraction;
      } else {
        spec.adoption[label] = fraction;
      }
    } else if (key.starts_with("mode.")) {
      const auto label = std::string(key.substr(5));
      const ChargeMode mode = parse_mode(value);
      if (label == "*") {
        spec.mode_all = mode;
      } else {
        spec.modes[label] = mode;
      }
    } else if (key == "slow.rated_kw") {
      spec.slow.rated_power_kw = parse_param(value);
    } else if (key == "slow.t1_h") {
      spec.slow.ramp_start_h = parse_param(value);
    } else if (key == "slow.t2_h") {
      spec.slow.ramp_end_h = parse_param(value);
    } else if (key == "rapid.rated_kw") {
      spec.rapid.rated_power_kw = parse_param(value);
    } else if (key == "rapid.t1_h") {
      spec.rapid.ramp_start_h = parse_param(value);
    } else if (key == "rapid.t2_h") {
      spec.rapid.ramp_end_h = parse_param(value);
    } else if (key == "aggregation") {
      const auto aggregation = Aggregation::from_label(value);
      if (!aggregation) {
        throw ScenarioParseError(
            line_no, "aggregation must be alldays|mon|...|sun, got '" +
                         std::string(value) + "'");
      }
      spec.aggregation = *aggregation;
    } else {
      throw ScenarioParseError(line_no,
                               "unknown key '" + std::string(key) + "'");
    }
  }

  if (!spec.slow.ok()) {
    throw ScenarioParseError(line_no,
                             "slow profile is invalid (needs rated_kw > 0 "
                             "and 0 <= t1_h <= t2_h)");
  }
  if (!spec.rapid.ok()) {
    throw ScenarioParseError(line_no,
                             "rapid profile is invalid (needs rated_kw > 0 "
                             "and 0 <= t1_h <= t2_h)");
  }
  return spec;
}

ScenarioConfig make_scenario_config(const ScenarioSpec& spec,
                                    std::span<const std::string> classes) {
  ScenarioConfig cfg;
  cfg.aggregation = spec.aggregation;

  cfg.adoption = spec.adoption;
  if (spec.adoption_all) {
    for (const auto& label : classes) {
      if (!cfg.adoption.contains(label)) cfg.adoption[label] = *spec.adoption_all;
    }
  }

  const auto defaults = default_policies();
  for (const auto& [label, fraction] : cfg.adoption) {
    ChargePolicy policy;
    policy.vessel_class = label;
    if (const auto it = spec.modes.find(label); it != spec.modes.end()) {
      policy.mode = it->second;
    } else if (spec.mode_all) {
      policy.mode = *spec.mode_all;
    } else if (const auto it2 = defaults.find(label); it2 != defaults.end()) {
      policy.mode = it2->second.mode;
    } else {
      throw std::runtime_error("no charging mode for vessel class '" + label +
                               "'; add 'mode." + label + " = slow|rapid'");
    }
    policy.profile = policy.mode == ChargeMode::slow ? spec.slow : spec.rapid;
    cfg.policies[label] = policy;
  }
  return cfg;
}

}  // namespace portload
