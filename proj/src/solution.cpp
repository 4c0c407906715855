// SPDX-License-Identifier: Apache-2.0

#include "vaamoo/solution.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "vaamoo/errors.hpp"

namespace vaamoo {

using nlohmann::json;

std::size_t solution_length(std::size_t n_iot, std::size_t n_sensors, std::size_t n_uav, std::size_t n_bs) {
    if (n_iot < 1 || n_sensors < 1 || n_uav < 1 || n_bs < 1)
        throw std::invalid_argument("solution_length needs counts >= 1");
    return (1 + 2 * n_sensors) * n_iot + (4 * n_uav + 2) * n_bs;
}

Solution blank_solution(const Scenario& s) {
    Solution x;
    for (const auto& c : s.clusters) {
        x.selection.emplace_back(c.sensors.size(), 0);
        x.sensor_weights.emplace_back(c.sensors.size(), 0.0);
    }
    x.receiver.assign(s.n_iot(), 0);
    x.bs_order.resize(s.n_bs());
    std::iota(x.bs_order.begin(), x.bs_order.end(), std::size_t{0});
    x.positions.assign(s.n_bs(), std::vector<Vec3>(s.n_uav()));
    x.uav_weights.assign(s.n_bs(), std::vector<double>(s.n_uav(), 0.0));
    x.perf_time.assign(s.n_bs(), 0.0);
    return x;
}

namespace {

void shape_error(const std::string& what) { throw InvalidSolutionError(what); }

}  // namespace

void check_structure(const Solution& x, const Scenario& s) {
    const std::size_t n_iot = s.n_iot(), n_uav = s.n_uav(), n_bs = s.n_bs();
    if (x.selection.size() != n_iot || x.sensor_weights.size() != n_iot || x.receiver.size() != n_iot)
        shape_error("D, I_SN and A need one entry per cluster");
    for (std::size_t h = 0; h < n_iot; ++h) {
        const std::size_t n = s.clusters[h].sensors.size();
        if (x.selection[h].size() != n || x.sensor_weights[h].size() != n)
            shape_error("cluster " + std::to_string(h) + " column length does not match its sensor count");
        for (auto b : x.selection[h])
            if (b > 1) shape_error("D must be binary");
        if (x.receiver[h] >= n_uav) shape_error("A[" + std::to_string(h) + "] is not a UAV index");
    }
    if (x.bs_order.size() != n_bs) shape_error("Q must list every base station");
    std::vector<std::uint8_t> seen(n_bs, 0);
    for (auto k : x.bs_order) {
        if (k >= n_bs || seen[k]) shape_error("Q is not a permutation");
        seen[k] = 1;
    }
    if (x.positions.size() != n_bs || x.uav_weights.size() != n_bs || x.perf_time.size() != n_bs)
        shape_error("P, I_UAV and T_perf need one entry per base station");
    for (std::size_t k = 0; k < n_bs; ++k)
        if (x.positions[k].size() != n_uav || x.uav_weights[k].size() != n_uav)
            shape_error("P and I_UAV need one entry per UAV");
}

std::size_t continuous_size(const Scenario& s) {
    std::size_t n = 0;
    for (const auto& c : s.clusters) n += c.sensors.size();
    return n + s.n_bs() * (4 * s.n_uav() + 1);
}

std::vector<double> continuous_vector(const Solution& x) {
    std::vector<double> v;
    for (const auto& col : x.sensor_weights) v.insert(v.end(), col.begin(), col.end());
    for (const auto& row : x.positions)
        for (const auto& p : row) {
            v.push_back(p.x);
            v.push_back(p.y);
            v.push_back(p.z);
        }
    for (const auto& row : x.uav_weights) v.insert(v.end(), row.begin(), row.end());
    v.insert(v.end(), x.perf_time.begin(), x.perf_time.end());
    return v;
}

void assign_continuous(Solution& x, std::span<const double> values) {
    std::size_t expected = x.perf_time.size();
    for (const auto& col : x.sensor_weights) expected += col.size();
    for (const auto& row : x.positions) expected += 3 * row.size();
    for (const auto& row : x.uav_weights) expected += row.size();
    if (values.size() != expected) throw std::invalid_argument("continuous vector length mismatch");
    std::size_t i = 0;
    for (auto& col : x.sensor_weights)
        for (auto& w : col) w = values[i++];
    for (auto& row : x.positions)
        for (auto& p : row) {
            p.x = values[i++];
            p.y = values[i++];
            p.z = values[i++];
        }
    for (auto& row : x.uav_weights)
        for (auto& w : row) w = values[i++];
    for (auto& t : x.perf_time) t = values[i++];
}

ContinuousBounds continuous_bounds(const Scenario& s, const PerfTimeLimits& limits) {
    ContinuousBounds b;
    auto push = [&b](double lo, double hi) {
        b.lower.push_back(lo);
        b.upper.push_back(hi);
    };
    for (const auto& c : s.clusters)
        for (std::size_t i = 0; i < c.sensors.size(); ++i) push(0.0, 1.0);
    const auto& r = s.uav_region;
    for (std::size_t k = 0; k < s.n_bs(); ++k)
        for (std::size_t j = 0; j < s.n_uav(); ++j) {
            push(r.min_x(), r.max_x());
            push(r.min_y(), r.max_y());
            push(s.altitude_band.low, s.altitude_band.high);
        }
    for (std::size_t k = 0; k < s.n_bs(); ++k)
        for (std::size_t j = 0; j < s.n_uav(); ++j) push(0.0, 1.0);
    for (std::size_t k = 0; k < s.n_bs(); ++k) push(limits.min_s, limits.max_s);
    return b;
}

json solution_to_json(const Solution& x) {
    json p = json::array();
    for (const auto& row : x.positions) {
        json r = json::array();
        for (const auto& v : row) r.push_back({v.x, v.y, v.z});
        p.push_back(std::move(r));
    }
    return {{"D", x.selection},      {"A", x.receiver},      {"Q", x.bs_order}, {"I_SN", x.sensor_weights},
            {"P", std::move(p)},     {"I_UAV", x.uav_weights}, {"T_perf", x.perf_time}};
}

namespace {

template <typename T>
T read_as(const json& j, const std::string& key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(key, "missing field");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw SchemaError(key, e.what());
    }
}

}  // namespace

Solution solution_from_json(const json& j) {
    Solution x;
    x.selection = read_as<std::vector<std::vector<std::uint8_t>>>(j, "D");
    x.receiver = read_as<std::vector<std::size_t>>(j, "A");
    x.bs_order = read_as<std::vector<std::size_t>>(j, "Q");
    x.sensor_weights = read_as<std::vector<std::vector<double>>>(j, "I_SN");
    const auto p = read_as<std::vector<std::vector<std::vector<double>>>>(j, "P");
    for (std::size_t k = 0; k < p.size(); ++k) {
        auto& row = x.positions.emplace_back();
        for (std::size_t m = 0; m < p[k].size(); ++m) {
            const auto& v = p[k][m];
            if (v.size() != 3)
                throw SchemaError("P[" + std::to_string(k) + "][" + std::to_string(m) + "]", "expected [x, y, z]");
            row.push_back({v[0], v[1], v[2]});
        }
    }
    x.uav_weights = read_as<std::vector<std::vector<double>>>(j, "I_UAV");
    x.perf_time = read_as<std::vector<double>>(j, "T_perf");
    return x;
}

}  // namespace vaamoo
