// SPDX-License-Identifier: Apache-2.0

#include "vaamoo/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "swarm.hpp"
#include "vaamoo/channel.hpp"
#include "vaamoo/energy.hpp"

namespace vaamoo {

RunResult run_mssa(const Scenario& s, const OptimizerParams& params) {
    return detail::run_swarm(s, params, detail::SwarmKind::Mssa);
}

RunResult run_mopso(const Scenario& s, const OptimizerParams& params) {
    return detail::run_swarm(s, params, detail::SwarmKind::Mopso);
}

Solution random_laa_solution(const Scenario& s, Rng& rng, const PerfTimeLimits& limits, double cruise_speed) {
    Solution x = blank_solution(s);
    for (std::size_t h = 0; h < s.n_iot(); ++h) {
        auto& col = x.selection[h];
        std::fill_n(col.begin(), std::min(s.n_select, col.size()), std::uint8_t{1});
        std::shuffle(col.begin(), col.end(), rng.engine());
        std::fill(x.sensor_weights[h].begin(), x.sensor_weights[h].end(), 1.0);
        x.receiver[h] = rng.index(s.n_uav());
    }
    const auto initial = s.uav_positions();
    const Vec3 c = centroid(initial);
    // The margin keeps rounding in the offsets from landing just under d_min.
    const double spacing = std::max(s.channel.wavelength() / 2.0, s.d_min * (1.0 + 1e-9));
    const double z = s.altitude_band.mid();
    const double n = static_cast<double>(s.n_uav());
    for (std::size_t k = 0; k < s.n_bs(); ++k) {
        const Vec3 to_bs = s.base_stations[k] - c;
        const double hd = to_bs.horizontal_norm();
        // Array axis is horizontal and perpendicular to the base-station bearing.
        const Vec3 axis = hd > 0.0 ? Vec3{-to_bs.y / hd, to_bs.x / hd, 0.0} : Vec3{1.0, 0.0, 0.0};
        for (std::size_t j = 0; j < s.n_uav(); ++j) {
            const double offset = (static_cast<double>(j) - (n - 1.0) / 2.0) * spacing;
            x.positions[k][j] = {c.x + offset * axis.x, c.y + offset * axis.y, z};
        }
        std::fill(x.uav_weights[k].begin(), x.uav_weights[k].end(), 1.0);
    }
    const std::vector<Vec3>* prev = &initial;
    for (std::size_t k : x.bs_order) {
        double longest = 0.0;
        for (std::size_t j = 0; j < s.n_uav(); ++j)
            longest = std::max(longest, distance((*prev)[j], x.positions[k][j]));
        x.perf_time[k] = std::clamp(longest / cruise_speed, limits.min_s, limits.max_s);
        prev = &x.positions[k];
    }
    return x;
}

namespace {

double standoff(const Scenario& s, const StrategyConfig& cfg) {
    return cfg.standoff_altitude >= 0.0 ? cfg.standoff_altitude : s.altitude_band.mid();
}

Vec3 cluster_center(const IotCluster& c) {
    std::vector<Vec3> pts;
    for (const auto& sn : c.sensors) pts.push_back(sn.position);
    return centroid(pts);
}

// Rate of a single unit-weight element over a ground/air link.
double single_link_rate(Vec3 a, Vec3 b, const ChannelParams& ch) {
    const double w[] = {1.0};
    return cb_link_rate(ch.array_efficiency, LinkGeometry::between(a, b), w, ch);
}

double transfer(double bits, double rate, const StrategyConfig& cfg) {
    if (bits == 0.0) return 0.0;
    return rate >= cfg.min_link_rate_bps ? bits / rate : kInfinity;
}

// Flies every UAV straight to its target at cruise speed; the phase lasts
// until the slowest arrives and early arrivals hover.
std::pair<double, double> fly_group(std::vector<Vec3>& from, const std::vector<Vec3>& to, const Scenario& s,
                                    const StrategyConfig& cfg) {
    double longest = 0.0;
    for (std::size_t j = 0; j < from.size(); ++j) longest = std::max(longest, distance(from[j], to[j]));
    const double phase = longest / cfg.cruise_speed;
    double energy = 0.0;
    for (std::size_t j = 0; j < from.size(); ++j) {
        const double t = distance(from[j], to[j]) / cfg.cruise_speed;
        energy += leg_energy({from[j], to[j], t}, s.energy) + hover_energy(phase - t, s.energy);
        from[j] = to[j];
    }
    return {phase, energy};
}

}  // namespace

StrategyResult strategy_multihop(const Scenario& s, const StrategyConfig& cfg) {
    if (s.n_iot() == 0 || s.n_uav() % s.n_iot() != 0)
        throw std::invalid_argument("multihop needs N_UAV to be a multiple of N_IoT");
    const std::size_t chain = s.n_uav() / s.n_iot();
    const double z = standoff(s, cfg);
    const auto initial = s.uav_positions();
    const auto& ch = s.channel;

    StrategyResult r{"multihop", 0.0, 0.0, {}};
    double fly_total = 0.0, relay_total = 0.0, fly_energy = 0.0, relay_energy = 0.0;
    for (std::size_t h = 0; h < s.n_iot(); ++h) {
        const Vec3 src = cluster_center(s.clusters[h]);
        const double bits = s.clusters[h].data_volume_bits;
        std::vector<Vec3> at(initial.begin() + static_cast<std::ptrdiff_t>(h * chain),
                             initial.begin() + static_cast<std::ptrdiff_t>((h + 1) * chain));
        double cluster_time = 0.0;
        for (std::size_t k = 0; k < s.n_bs(); ++k) {
            const Vec3 bs = s.base_stations[k];
            std::vector<Vec3> relays(chain);
            for (std::size_t i = 0; i < chain; ++i) {
                const double f = static_cast<double>(i + 1) / static_cast<double>(chain + 1);
                relays[i] = {src.x + f * (bs.x - src.x), src.y + f * (bs.y - src.y), z};
            }
            const auto [t_fly, e_fly] = fly_group(at, relays, s, cfg);

            std::vector<double> hop_rates{single_link_rate(src, relays.front(), ch)};
            for (std::size_t i = 0; i + 1 < chain; ++i)
                hop_rates.push_back(a2a_rate(relays[i], relays[i + 1], ch.p_max_w, ch));
            hop_rates.push_back(single_link_rate(relays.back(), bs, ch));
            double t_relay = 0.0;
            if (cfg.pipelined) {
                t_relay = transfer(bits, *std::min_element(hop_rates.begin(), hop_rates.end()), cfg);
            } else {
                for (double rate : hop_rates) t_relay += transfer(bits, rate, cfg);
            }
            const double e_relay = std::isfinite(t_relay)
                                       ? static_cast<double>(chain) * hover_energy(t_relay, s.energy)
                                       : kInfinity;
            cluster_time += t_fly + t_relay;
            fly_total += t_fly;
            relay_total += t_relay;
            fly_energy += e_fly;
            relay_energy += e_relay;
        }
        r.mission_time = std::max(r.mission_time, cluster_time);
    }
    r.energy = fly_energy + relay_energy;
    r.trace = {{"reposition", fly_total, fly_energy}, {"relay", relay_total, relay_energy}};
    return r;
}

StrategyResult strategy_flybetween(const Scenario& s, const StrategyConfig& cfg) {
    const double z = standoff(s, cfg);
    const auto& ch = s.channel;
    std::vector<Vec3> at = s.uav_positions();
    std::vector<double> clock(s.n_uav(), 0.0);

    StrategyResult r{"flybetween", 0.0, 0.0, {}};
    double fly_t = 0.0, fly_e = 0.0, collect_t = 0.0, collect_e = 0.0, deliver_t = 0.0, deliver_e = 0.0;
    auto fly = [&](std::size_t j, Vec3 target) {
        const double t = distance(at[j], target) / cfg.cruise_speed;
        const double e = leg_energy({at[j], target, t}, s.energy);
        at[j] = target;
        clock[j] += t;
        fly_t += t;
        fly_e += e;
    };
    std::size_t pair = 0;
    for (std::size_t h = 0; h < s.n_iot(); ++h) {
        const Vec3 src = cluster_center(s.clusters[h]);
        const double bits = s.clusters[h].data_volume_bits;
        for (std::size_t k = 0; k < s.n_bs(); ++k, ++pair) {
            const std::size_t j = pair % s.n_uav();
            fly(j, {src.x, src.y, z});
            const double tc = transfer(bits, single_link_rate(src, at[j], ch), cfg);
            const double ec = std::isfinite(tc) ? hover_energy(tc, s.energy) : kInfinity;
            clock[j] += tc;
            collect_t += tc;
            collect_e += ec;

            const Vec3 bs = s.base_stations[k];
            fly(j, {bs.x, bs.y, z});
            const double td = transfer(bits, single_link_rate(at[j], bs, ch), cfg);
            const double ed = std::isfinite(td) ? hover_energy(td, s.energy) : kInfinity;
            clock[j] += td;
            deliver_t += td;
            deliver_e += ed;
        }
    }
    r.mission_time = clock.empty() ? 0.0 : *std::max_element(clock.begin(), clock.end());
    r.energy = fly_e + collect_e + deliver_e;
    r.trace = {{"flight", fly_t, fly_e}, {"collect", collect_t, collect_e}, {"deliver", deliver_t, deliver_e}};
    return r;
}

}  // namespace vaamoo
