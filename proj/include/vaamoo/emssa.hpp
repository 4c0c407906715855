// SPDX-License-Identifier: Apache-2.0
//
// Enhanced multi-objective salp swarm optimizer over the mixed encoding, and
// the population driver it shares with the baseline optimizers.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vaamoo/archive.hpp"
#include "vaamoo/mop.hpp"
#include "vaamoo/operators.hpp"
#include "vaamoo/rng.hpp"
#include "vaamoo/scenario.hpp"
#include "vaamoo/solution.hpp"

namespace vaamoo {

struct LevyParams {
    double exponent = 1.5;
    double step_scale_m = 1.0;
};

struct PsoParams {
    double inertia_start = 0.9;
    double inertia_end = 0.4;
    double c_cognitive = 2.0;
    double c_social = 2.0;
};

struct OptimizerParams {
    std::size_t pop_size = 30;
    std::size_t max_iters = 100;
    std::size_t archive_capacity = 100;
    std::size_t grid_divisions = 10;
    WeierstrassParams weierstrass;
    LevyParams levy;
    std::size_t max_repair_attempts = 50;
    double c2_seed = 0.3;
    double c3_seed = 0.7;
    PsoParams pso;
    std::uint64_t rng_seed = 1;
    MopOptions mop;
    /// Worker threads for objective evaluation; results do not depend on it.
    std::size_t eval_threads = 1;
};

/// Throws std::invalid_argument for out-of-range parameters.
void validate_params(const OptimizerParams& p);

struct SnapshotRow {
    std::uint64_t solution_id = 0;
    ObjectiveVector objectives;
};

struct IterationSnapshot {
    std::size_t iter = 0;
    std::vector<SnapshotRow> archive;
};

struct RunResult {
    std::string algorithm;
    OptimizerParams params;
    std::vector<ArchiveEntry> archive;
    std::vector<IterationSnapshot> history;
    std::size_t evaluations = 0;
    /// Not serialized, so identical runs serialize identically.
    double wall_clock_s = 0.0;

    /// Smallest value of objective m (0, 1, 2) in the final archive; +inf if empty.
    [[nodiscard]] double best(std::size_t m) const;
};

/// Initialization: random D/A/Q, Weierstrass-lattice
/// continuous values, then collision repair.
Solution init_solution(const Scenario& s, const OptimizerParams& params, Rng& rng);

/// Same discrete parts; continuous values uniform in their bounds.
Solution init_solution_uniform(const Scenario& s, const OptimizerParams& params, Rng& rng);

enum class SalpRole { Leader, Follower };

/// Draws one value per call from the sine (c2) and Gauss (c3) maps.
struct ChaosStreams {
    double c2;
    double c3;
    double next_c2() { return c2 = sine_map(c2); }
    double next_c3() { return c3 = gauss_map(c3); }
};

/// Salp update. Leader: continuous dims move around X_best by c1 times a
/// bound-scaled step with side chosen by c3 >= 0.5. Follower: average with
/// the predecessor. Discrete parts of both roles follow X_best: swap
/// mutation of D, copy-or-redraw of A, PMX of Q, each gated by rand > c1.
/// `chaos` supplies per-dimension (c2, c3); when null, `fixed_c2`/`fixed_c3`
/// are used for every dimension.
Solution update_solution(const Solution& x, const Solution& x_best, const Solution* x_prev, SalpRole role, double c1,
                         ChaosStreams* chaos, double fixed_c2, double fixed_c3, const ContinuousBounds& bounds,
                         const Scenario& s, Rng& rng);

/// Swap mutation / copy-or-redraw / PMX for the discrete parts only.
void update_discrete(Solution& x, const Solution& x_best, double c1, const Scenario& s, Rng& rng);

/// Clamps every continuous value, then separates colliding UAVs in each
/// configuration: Levy steps, then radial projection, then uniform
/// resampling as a last resort.
void repair_constraints(Solution& x, const Scenario& s, const OptimizerParams& params, const ContinuousBounds& bounds,
                        Rng& rng);

RunResult run_emssa(const Scenario& s, const OptimizerParams& params);

nlohmann::json params_to_json(const OptimizerParams& p);
/// Deterministic serialization: params, per-iteration fronts, final archive.
std::string run_result_to_json(const RunResult& r);

}  // namespace vaamoo
