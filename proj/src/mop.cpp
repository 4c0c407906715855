// SPDX-License-Identifier: Apache-2.0

#include "vaamoo/mop.hpp"

#include <cmath>

#include "vaamoo/channel.hpp"
#include "vaamoo/energy.hpp"
#include "vaamoo/errors.hpp"

namespace vaamoo {

bool ObjectiveVector::finite() const { return std::isfinite(f1) && std::isfinite(f2) && std::isfinite(f3); }
double ObjectiveVector::f2_db() const { return 20.0 * std::log10(f2); }
double ObjectiveVector::f2_db_power() const { return 10.0 * std::log10(f2); }

Vec3 swarm_centroid(const std::vector<Vec3>& positions) { return centroid(positions); }

namespace {

double transfer_time(double bits, double rate) {
    if (bits == 0.0) return 0.0;
    return rate > 0.0 ? bits / rate : kInfinity;
}

std::vector<double> weights_of(const ArraySpec& spec) {
    std::vector<double> w;
    w.reserve(spec.elements.size());
    for (const auto& e : spec.elements) w.push_back(e.weight);
    return w;
}

Vec3 element_centroid(const ArraySpec& spec) {
    std::vector<Vec3> pts;
    pts.reserve(spec.elements.size());
    for (const auto& e : spec.elements) pts.push_back(e.position);
    return centroid(pts);
}

}  // namespace

Evaluator::Evaluator(const Scenario& s, MopOptions options)
    : scenario_(s), options_(options), grid_(AngularGrid::from_step_deg(options.quadrature_step_deg)),
      initial_(s.uav_positions()) {
    for (const auto& c : s.clusters) total_data_ += c.data_volume_bits;
    if (initial_.size() >= 2) {
        for (std::size_t j = 0; j < initial_.size(); ++j)
            broadcast_rate_.push_back(min_broadcast_rate(j, initial_, s.channel.p_max_w, s.channel));
    }
}

ArraySpec Evaluator::ground_array(const Solution& x, std::size_t h) const {
    const auto& cluster = scenario_.clusters[h];
    ArraySpec spec;
    spec.wavelength = scenario_.channel.wavelength();
    for (std::size_t i = 0; i < cluster.sensors.size(); ++i)
        if (x.selection[h][i]) spec.elements.push_back({cluster.sensors[i].position, x.sensor_weights[h][i]});
    if (!spec.elements.empty())
        spec.steer = direction_between(element_centroid(spec), initial_[x.receiver[h]]);
    return spec;
}

ArraySpec Evaluator::aerial_array(const Solution& x, std::size_t k) const {
    ArraySpec spec;
    spec.wavelength = scenario_.channel.wavelength();
    for (std::size_t j = 0; j < scenario_.n_uav(); ++j) spec.elements.push_back({x.positions[k][j], x.uav_weights[k][j]});
    spec.steer = direction_between(centroid(x.positions[k]), scenario_.base_stations[k]);
    return spec;
}

double Evaluator::sll_or_inf(const ArraySpec& spec, ElementMask mask, Vec3 origin) const {
    if (spec.elements.empty()) return kInfinity;
    try {
        return sll_ratio(spec, mask, direction_between(origin, scenario_.eavesdropper));
    } catch (const ZeroPatternError&) {
        return kInfinity;
    }
}

void Evaluator::run_mission(const Solution& x, MissionBreakdown& out, double* energy) const {
    check_structure(x, scenario_);
    const auto& s = scenario_;
    const auto& ch = s.channel;
    const double eta = ch.array_efficiency;

    out = MissionBreakdown{};
    // Ground-to-air: clusters transmit in parallel, the slowest one decides.
    for (std::size_t h = 0; h < s.n_iot(); ++h) {
        const ArraySpec spec = ground_array(x, h);
        double rate = 0.0;
        if (!spec.elements.empty()) {
            try {
                const double gain = directivity_gain(spec, {}, eta, grid_);
                const auto geom = LinkGeometry::between(element_centroid(spec), initial_[x.receiver[h]]);
                const auto w = weights_of(spec);
                rate = cb_link_rate(gain, geom, w, ch);
            } catch (const ZeroPatternError&) {
                rate = 0.0;
            }
        }
        out.g2a_rates.push_back(rate);
        out.t_g2a = std::max(out.t_g2a, transfer_time(s.clusters[h].data_volume_bits, rate));
    }

    // Air-to-air: each receiver broadcasts its cluster's data in turn.
    for (std::size_t h = 0; h < s.n_iot(); ++h) {
        if (broadcast_rate_.empty()) {
            out.a2a_rates.push_back(kInfinity);
            continue;
        }
        const double rate = broadcast_rate_[x.receiver[h]];
        out.a2a_rates.push_back(rate);
        out.t_a2a += transfer_time(s.clusters[h].data_volume_bits, rate);
    }

    // Air-to-ground: reposition, then hover and transmit, base station by base station.
    out.a2g_rates.assign(s.n_bs(), 0.0);
    out.tran_times.assign(s.n_bs(), 0.0);
    out.leg_energies.assign(s.n_bs(), std::vector<double>(s.n_uav(), 0.0));
    double f3 = 0.0;
    double perf = 0.0;
    const std::vector<Vec3>* prev = &initial_;
    for (std::size_t i = 0; i < s.n_bs(); ++i) {
        const std::size_t k = x.bs_order[i];
        const auto& here = x.positions[k];
        for (std::size_t j = 0; j < s.n_uav(); ++j) {
            double e = kInfinity;
            try {
                e = leg_energy({(*prev)[j], here[j], x.perf_time[k]}, s.energy);
            } catch (const DomainError&) {
                out.speed_feasible = false;
            }
            out.leg_energies[k][j] = e;
            f3 += e;
        }
        perf += x.perf_time[k];

        const ArraySpec spec = aerial_array(x, k);
        double rate = 0.0;
        try {
            const double gain = directivity_gain(spec, {}, eta, grid_);
            const auto geom = LinkGeometry::between(centroid(here), s.base_stations[k]);
            const auto w = weights_of(spec);
            rate = cb_link_rate(gain, geom, w, ch);
        } catch (const ZeroPatternError&) {
            rate = 0.0;
        }
        out.a2g_rates[k] = rate;
        const double t = transfer_time(total_data_, rate);
        out.tran_times[k] = t;
        out.t_a2g_tran += t;
        f3 += static_cast<double>(s.n_uav()) * (std::isfinite(t) ? hover_energy(t, s.energy) : kInfinity);
        prev = &here;
    }
    out.t_a2g_perf = out.speed_feasible ? perf : kInfinity;
    f3 += static_cast<double>(s.n_uav()) * (std::isfinite(out.t_a2a) ? hover_energy(out.t_a2a, s.energy) : kInfinity);
    if (!out.speed_feasible) f3 = kInfinity;
    if (energy) *energy = f3;
}

double Evaluator::evaluate_f1(const Solution& x, MissionBreakdown* breakdown) const {
    MissionBreakdown local;
    MissionBreakdown& b = breakdown ? *breakdown : local;
    run_mission(x, b, nullptr);
    return b.total();
}

double Evaluator::evaluate_f3(const Solution& x) const {
    MissionBreakdown b;
    double e = 0.0;
    run_mission(x, b, &e);
    return e;
}

double Evaluator::evaluate_f2(const Solution& x) const {
    check_structure(x, scenario_);
    double sum = 0.0;
    for (std::size_t k = 0; k < scenario_.n_bs(); ++k) {
        const ArraySpec spec = aerial_array(x, k);
        sum += sll_or_inf(spec, {}, centroid(x.positions[k]));
    }
    for (std::size_t h = 0; h < scenario_.n_iot(); ++h) {
        const ArraySpec spec = ground_array(x, h);
        sum += spec.elements.empty() ? kInfinity : sll_or_inf(spec, {}, element_centroid(spec));
    }
    return sum;
}

ObjectiveVector Evaluator::evaluate(const Solution& x, MissionBreakdown* breakdown) const {
    MissionBreakdown local;
    MissionBreakdown& b = breakdown ? *breakdown : local;
    double f3 = 0.0;
    run_mission(x, b, &f3);
    return {b.total(), evaluate_f2(x), f3};
}

std::vector<ConstraintViolation> Evaluator::check_constraints(const Solution& x) const {
    std::vector<ConstraintViolation> out;
    auto add = [&out](std::string c, std::string d) { out.push_back({std::move(c), std::move(d)}); };
    try {
        check_structure(x, scenario_);
    } catch (const InvalidSolutionError& e) {
        add("structure", e.what());
        return out;
    }
    const auto& s = scenario_;
    auto in01 = [](double w) { return w >= 0.0 && w <= 1.0; };
    for (std::size_t h = 0; h < s.n_iot(); ++h) {
        std::size_t ones = 0;
        for (auto b : x.selection[h]) ones += b;
        if (ones != s.n_select)
            add("selection_count", "cluster " + std::to_string(h) + " selects " + std::to_string(ones) + " sensors");
        for (std::size_t i = 0; i < x.sensor_weights[h].size(); ++i)
            if (!in01(x.sensor_weights[h][i]))
                add("sensor_weight", "I_SN[" + std::to_string(h) + "][" + std::to_string(i) + "] outside [0, 1]");
    }
    for (std::size_t k = 0; k < s.n_bs(); ++k) {
        const std::string tag = "[" + std::to_string(k) + "]";
        for (std::size_t j = 0; j < s.n_uav(); ++j) {
            const auto& p = x.positions[k][j];
            const std::string at = tag + "[" + std::to_string(j) + "]";
            if (!in01(x.uav_weights[k][j])) add("uav_weight", "I_UAV" + at + " outside [0, 1]");
            if (!s.uav_region.contains(p.x, p.y)) add("position", "P" + at + " outside the UAV region");
            if (!s.altitude_band.contains(p.z)) add("altitude", "P" + at + " outside the altitude band");
        }
        const double t = x.perf_time[k];
        if (!(t >= options_.perf_time.min_s && t <= options_.perf_time.max_s))
            add("perf_time", "T_perf" + tag + " outside its bounds");
    }
    auto separation = [&](const std::vector<Vec3>& pts, const std::string& where) {
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b)
                if (distance(pts[a], pts[b]) < s.d_min)
                    add("separation", where + ": UAVs " + std::to_string(a) + " and " + std::to_string(b) +
                                          " closer than d_min");
    };
    separation(initial_, "initial deployment");
    for (std::size_t k = 0; k < s.n_bs(); ++k) separation(x.positions[k], "P[" + std::to_string(k) + "]");
    return out;
}

}  // namespace vaamoo
