// SPDX-License-Identifier: Apache-2.0
//
// Mixed-variable decision vector: sensor selection D, receiver UAV per
// cluster A, base-station service order Q, sensor weights I_SN, UAV
// positions P, UAV weights I_UAV and repositioning durations T_perf.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "vaamoo/geometry.hpp"
#include "vaamoo/scenario.hpp"

namespace vaamoo {

struct Solution {
    /// D, one 0/1 column per cluster, indexed [cluster][sensor].
    std::vector<std::vector<std::uint8_t>> selection;
    /// A, 0-based receiver UAV per cluster.
    std::vector<std::size_t> receiver;
    /// Q, 0-based base-station indices in service order.
    std::vector<std::size_t> bs_order;
    /// I_SN, indexed [cluster][sensor].
    std::vector<std::vector<double>> sensor_weights;
    /// P, indexed [base station][uav].
    std::vector<std::vector<Vec3>> positions;
    /// I_UAV, indexed [base station][uav].
    std::vector<std::vector<double>> uav_weights;
    /// T_perf, indexed by base station.
    std::vector<double> perf_time;

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Bounds on the repositioning durations. The other continuous bounds come
/// from the scenario.
struct PerfTimeLimits {
    double min_s = 1.0;
    double max_s = 120.0;
};

/// Number of decision variables, (1 + 2 N_SN) N_IoT + (4 N_UAV + 2) N_BS.
std::size_t solution_length(std::size_t n_iot, std::size_t n_sensors, std::size_t n_uav, std::size_t n_bs);

/// Zero-filled solution shaped for `s`, with identity Q and A = 0.
Solution blank_solution(const Scenario& s);

/// Throws InvalidSolutionError unless the shapes match `s`, D is binary, A
/// holds valid UAV indices and Q is a permutation.
void check_structure(const Solution& x, const Scenario& s);

// Continuous part, flattened as I_SN (cluster, sensor), P (bs, uav, xyz),
// I_UAV (bs, uav), T_perf (bs).
std::size_t continuous_size(const Scenario& s);
std::vector<double> continuous_vector(const Solution& x);
void assign_continuous(Solution& x, std::span<const double> values);

struct ContinuousBounds {
    std::vector<double> lower;
    std::vector<double> upper;
};
ContinuousBounds continuous_bounds(const Scenario& s, const PerfTimeLimits& limits);

/// JSON object with keys D, A, Q, I_SN, P, I_UAV, T_perf.
nlohmann::json solution_to_json(const Solution& x);
/// Throws SchemaError on malformed input.
Solution solution_from_json(const nlohmann::json& j);

}  // namespace vaamoo
