// SPDX-License-Identifier: Apache-2.0
//
// Rotary-wing propulsion power and the energy of constant-speed flight legs
// that start and end at hover.

#pragma once

#include "vaamoo/geometry.hpp"
#include "vaamoo/scenario.hpp"

namespace vaamoo {

struct FlightLeg {
    Vec3 start;
    Vec3 end;
    double duration = 0.0;  // seconds
};

/// Propulsion power in watts at forward speed v (m/s).
double propulsion_power(double v, const EnergyParams& params);

/// (P_B + P_I) * duration.
double hover_energy(double duration, const EnergyParams& params);

/// Cruise speed of a leg; 0 for a stationary leg. Throws InfeasibleLegError
/// when the UAV has to move in zero time.
double leg_speed(const FlightLeg& leg);

/// P(v) T + m g dz at v = |end - start| / T. A descending leg never costs
/// less than hovering for the same time. Throws InfeasibleLegError or
/// SpeedInfeasibleError.
double leg_energy(const FlightLeg& leg, const EnergyParams& params);

}  // namespace vaamoo
