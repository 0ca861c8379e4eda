#include "portload/charging.hpp"

#include <algorithm>
#include <stdexcept>

namespace portload {

ChargingProfile slow_charging_default() { return {75.0, 3.0, 4.0}; }

ChargingProfile rapid_charging_default() { return {150.0, 1.0, 1.0}; }

double instantaneous_power(const ChargingProfile& p, double t_hours) {
  if (!(t_hours > 0.0)) return 0.0;
  if (t_hours <= p.ramp_start_h) return p.rated_power_kw;
  if (t_hours <= p.ramp_end_h && p.ramp_end_h > p.ramp_start_h) {
    return p.rated_power_kw * (p.ramp_end_h - t_hours) /
           (p.ramp_end_h - p.ramp_start_h);
  }
  return 0.0;
}

double cumulative_energy(const ChargingProfile& p, double t_hours) {
  if (!(t_hours > 0.0)) return 0.0;
  double energy = p.rated_power_kw * std::min(t_hours, p.ramp_start_h);
  if (t_hours > p.ramp_start_h && p.ramp_end_h > p.ramp_start_h) {
    const double span = p.ramp_end_h - p.ramp_start_h;
    const double u = std::min(t_hours, p.ramp_end_h) - p.ramp_start_h;
    energy += p.rated_power_kw * (u - u * u / (2.0 * span));
  }
  return energy;
}

double session_energy(const ChargingProfile& p) {
  if (!p.ok()) throw std::invalid_argument("invalid charging profile");
  return p.rated_power_kw * p.ramp_start_h +
         p.rated_power_kw * (p.ramp_end_h - p.ramp_start_h) / 2.0;
}

SessionEnergyVector hourly_energy_vector(const ChargingProfile& p,
                                         int start_slot) {
  if (!p.ok()) throw std::invalid_argument("invalid charging profile");
  if (start_slot < 0 || start_slot > 23) {
    throw std::invalid_argument("start_slot must be 0..23");
  }
  SessionEnergyVector vec;
  vec.start_slot = start_slot;
  for (int k = 0; static_cast<double>(k) < p.ramp_end_h; ++k) {
    const double slice =
        cumulative_energy(p, k + 1.0) - cumulative_energy(p, k);
    // rounding residue near the session end can dip a hair below zero
    vec.energy_kwh_by_slot[(start_slot + k) % 24] += std::max(slice, 0.0);
  }
  return vec;
}

}  // namespace portload
