// SPDX-License-Identifier: Apache-2.0
//
// Comparison optimizers (salp swarm without the enhancements, particle
// swarm), the random linear-array plan, and the two non-beamforming
// delivery strategies.

#pragma once

#include <string>
#include <vector>

#include "vaamoo/emssa.hpp"
#include "vaamoo/mop.hpp"
#include "vaamoo/rng.hpp"
#include "vaamoo/scenario.hpp"
#include "vaamoo/solution.hpp"

namespace vaamoo {

/// Plain salp swarm: uniform initialization, c2 and c3 drawn uniformly
/// once per iteration. Discrete parts use the same operators as EMSSA.
RunResult run_mssa(const Scenario& s, const OptimizerParams& params);

/// Multi-objective particle swarm with archive leaders and linearly
/// decaying inertia.
RunResult run_mopso(const Scenario& s, const OptimizerParams& params);

/// Random sensor selection, unit weights, identity service order and a
/// uniform linear array at mid-altitude, broadside toward each base station.
Solution random_laa_solution(const Scenario& s, Rng& rng, const PerfTimeLimits& limits = {},
                             double cruise_speed = 10.0);

struct StrategyConfig {
    double cruise_speed = 10.0;
    /// Collection/relay altitude; negative means the middle of the altitude band.
    double standoff_altitude = -1.0;
    /// Multihop: pipeline hops (bottleneck rate) instead of store-and-forward.
    bool pipelined = false;
    /// Links slower than this are treated as out of range.
    double min_link_rate_bps = 1e3;
};

struct PhaseRecord {
    std::string phase;
    double seconds = 0.0;
    double joules = 0.0;
};

/// `mission_time` is when the last base station holds all data. Trace
/// seconds add up busy time across UAVs or clusters working in parallel, so
/// only the trace joules sum to `energy`.
struct StrategyResult {
    std::string strategy;
    double mission_time = 0.0;
    double energy = 0.0;
    std::vector<PhaseRecord> trace;
};

/// Per cluster, a chain of N_UAV / N_IoT relays from the cluster to each
/// base station in turn. Throws std::invalid_argument when N_UAV is not a
/// multiple of N_IoT.
StrategyResult strategy_multihop(const Scenario& s, const StrategyConfig& config = {});

/// (cluster, base station) pairs assigned round-robin to UAVs; each UAV
/// collects from its cluster, flies to its base station and delivers.
StrategyResult strategy_flybetween(const Scenario& s, const StrategyConfig& config = {});

}  // namespace vaamoo
