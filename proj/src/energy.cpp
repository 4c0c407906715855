// SPDX-License-Identifier: Apache-2.0

#include "vaamoo/energy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vaamoo/errors.hpp"

namespace vaamoo {

double propulsion_power(double v, const EnergyParams& p) {
    if (!(v >= 0.0)) throw DomainError("speed must be non-negative");
    const double v2 = v * v;
    const double v02 = p.v0_hover * p.v0_hover;
    const double blade = p.p_blade_w * (1.0 + 3.0 * v2 / (p.v_tip * p.v_tip));
    const double induced = p.p_induced_w * std::sqrt(std::sqrt(1.0 + v2 * v2 / (4.0 * v02 * v02)) - v2 / (2.0 * v02));
    const double parasite = 0.5 * p.d0_drag * p.air_density * p.rotor_solidity * p.rotor_area * v2 * v;
    return blade + induced + parasite;
}

double hover_energy(double duration, const EnergyParams& p) {
    if (!(duration >= 0.0)) throw DomainError("hover duration must be non-negative");
    return p.hover_power_w() * duration;
}

double leg_speed(const FlightLeg& leg) {
    const double len = distance(leg.start, leg.end);
    if (len == 0.0) return 0.0;
    if (!(leg.duration > 0.0)) throw InfeasibleLegError("moving leg needs a positive duration");
    return len / leg.duration;
}

double leg_energy(const FlightLeg& leg, const EnergyParams& p) {
    if (!(leg.duration >= 0.0)) throw DomainError("leg duration must be non-negative");
    const double v = leg_speed(leg);
    if (v > p.v_max)
        throw SpeedInfeasibleError("leg needs " + std::to_string(v) + " m/s, above v_max " + std::to_string(p.v_max));
    const double dz = leg.end.z - leg.start.z;
    const double energy = propulsion_power(v, p) * leg.duration + p.uav_mass_kg * p.gravity * dz;
    if (dz < 0.0) return std::max(energy, hover_energy(leg.duration, p));
    return energy;
}

}  // namespace vaamoo
