// SPDX-License-Identifier: Apache-2.0
//
// Probabilistic LoS air-to-ground channel, collaborative-beamforming link
// rate, and the LoS air-to-air broadcast rate.

#pragma once

#include <span>

#include "vaamoo/geometry.hpp"
#include "vaamoo/scenario.hpp"

namespace vaamoo {

struct LinkGeometry {
    double d3d = 0.0;           // transmitter to receiver distance
    double d2d = 0.0;           // horizontal distance
    double uav_altitude = 0.0;  // H_U

    /// Geometry of a ground<->air link; the altitude is taken from the higher endpoint.
    static LinkGeometry between(Vec3 a, Vec3 b);
};

double los_probability(const LinkGeometry& geom, const ChannelParams& params);

/// Channel power gain g_c = K0^-1 d^-alpha [P_LoS mu_LoS + P_NLoS mu_NLoS]^-1.
double channel_attenuation(const LinkGeometry& geom, const ChannelParams& params);

/// Total array transmit power sum(I^2) * P_max.
double array_transmit_power(std::span<const double> weights, const ChannelParams& params);

/// B log2(1 + P_CB G0 g_c / sigma^2) in bits/s.
double cb_link_rate(double gain, const LinkGeometry& geom, std::span<const double> weights,
                    const ChannelParams& params);

/// Single-antenna LoS rate between two UAVs, B log2(1 + P d^-alpha / (K0 sigma^2)).
double a2a_rate(Vec3 src, Vec3 dst, double tx_power_w, const ChannelParams& params);

/// Slowest rate from swarm[src] to every other UAV. Throws
/// DegenerateBroadcastError for a swarm of fewer than two UAVs.
double min_broadcast_rate(std::size_t src, std::span<const Vec3> swarm, double tx_power_w,
                          const ChannelParams& params);

}  // namespace vaamoo
