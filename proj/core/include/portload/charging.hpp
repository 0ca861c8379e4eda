#pragma once

#include <array>
#include <cmath>

namespace portload {

/// Piecewise-linear charging profile: constant rated power from the start of
/// the session until ramp_start_h, then a linear taper that reaches zero at
/// ramp_end_h. ramp_start_h == ramp_end_h models constant power with a hard
/// cutoff.
struct ChargingProfile {
  double rated_power_kw = 0.0;
  double ramp_start_h = 0.0;
  double ramp_end_h = 0.0;

  bool ok() const {
    return std::isfinite(rated_power_kw) && rated_power_kw > 0.0 &&
           std::isfinite(ramp_start_h) && std::isfinite(ramp_end_h) &&
           ramp_start_h >= 0.0 && ramp_start_h <= ramp_end_h;
  }
};

/// 75 kW, 3 h plateau, taper ending at 4 h.
ChargingProfile slow_charging_default();

/// 150 kW, full power for 1 h, no taper.
ChargingProfile rapid_charging_default();

/// Draw in kW at elapsed time t since the session began. Defined for any t:
/// zero outside (0, ramp_end_h].
double instantaneous_power(const ChargingProfile& p, double t_hours);

/// Energy delivered from session start through elapsed time t (kWh).
double cumulative_energy(const ChargingProfile& p, double t_hours);

/// Energy of one complete session (kWh):
/// rated_power_kw * ramp_start_h + rated_power_kw * (ramp_end_h - ramp_start_h) / 2.
double session_energy(const ChargingProfile& p);

/// Session energy split into absolute hour slots of a representative day.
struct SessionEnergyVector {
  int start_slot = 0;
  std::array<double, 24> energy_kwh_by_slot{};
};

/// Closed-form per-slot energies for a session that starts exactly at the
/// top of start_slot. Hours past midnight wrap modulo 24; sessions longer
/// than a day accumulate onto slots they revisit.
SessionEnergyVector hourly_energy_vector(const ChargingProfile& p,
                                         int start_slot);

}  // namespace portload
