// SPDX-License-Identifier: Apache-2.0

#include "vaamoo/channel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <limits>

#include "vaamoo/errors.hpp"

namespace vaamoo {

LinkGeometry LinkGeometry::between(Vec3 a, Vec3 b) {
    return {distance(a, b), horizontal_distance(a, b), std::max(a.z, b.z)};
}

double los_probability(const LinkGeometry& geom, const ChannelParams& params) {
    const double h = geom.uav_altitude;
    if (h < 0.0 || std::isnan(h)) throw DomainError("UAV altitude must be non-negative");
    if (h > 300.0) {
        static std::atomic<bool> warned{false};
        if (!warned.exchange(true))
            std::cerr << "warning: UAV altitude " << h << " m is above the 300 m LoS model envelope; using P_LoS = 1\n";
        return 1.0;
    }
    if (h >= params.h2) return 1.0;
    if (h <= params.h1) return params.p_los_ter;

    const double log_h = std::log10(h);
    const double d1 = std::max(460.0 * log_h - 700.0, 18.0);
    const double p1 = 4300.0 * log_h - 3800.0;
    if (geom.d2d <= d1) return 1.0;
    const double ratio = d1 / geom.d2d;
    return std::clamp(ratio + std::exp(-geom.d2d / p1) * (1.0 - ratio), 0.0, 1.0);
}

double channel_attenuation(const LinkGeometry& geom, const ChannelParams& params) {
    if (!(geom.d3d > 0.0)) throw DomainError("channel attenuation needs a positive link distance");
    const double p_los = los_probability(geom, params);
    const double mix = p_los * params.mu_los + (1.0 - p_los) * params.mu_nlos;
    return 1.0 / (params.pathloss_const * std::pow(geom.d3d, params.pathloss_exp) * mix);
}

double array_transmit_power(std::span<const double> weights, const ChannelParams& params) {
    double sum = 0.0;
    for (double w : weights) sum += w * w;
    return sum * params.p_max_w;
}

double cb_link_rate(double gain, const LinkGeometry& geom, std::span<const double> weights,
                    const ChannelParams& params) {
    if (gain < 0.0) throw DomainError("antenna gain must be non-negative");
    const double power = array_transmit_power(weights, params);
    if (power == 0.0 || gain == 0.0) return 0.0;
    const double snr = power * gain * channel_attenuation(geom, params) / params.noise_power_w();
    return params.bandwidth_hz * std::log2(1.0 + snr);
}

double a2a_rate(Vec3 src, Vec3 dst, double tx_power_w, const ChannelParams& params) {
    const double d = distance(src, dst);
    if (!(d > 0.0)) throw DomainError("air-to-air rate between coincident UAVs");
    const double snr =
        tx_power_w * std::pow(d, -params.pathloss_exp) / (params.pathloss_const * params.noise_power_w());
    return params.bandwidth_hz * std::log2(1.0 + snr);
}

double min_broadcast_rate(std::size_t src, std::span<const Vec3> swarm, double tx_power_w,
                          const ChannelParams& params) {
    if (swarm.size() < 2) throw DegenerateBroadcastError("broadcast needs at least two UAVs");
    if (src >= swarm.size()) throw std::out_of_range("broadcast source index out of range");
    double slowest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < swarm.size(); ++j) {
        if (j == src) continue;
        slowest = std::min(slowest, a2a_rate(swarm[src], swarm[j], tx_power_w, params));
    }
    return slowest;
}

}  // namespace vaamoo
