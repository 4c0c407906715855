// SPDX-License-Identifier: Apache-2.0
//
// Objective evaluation of a mission plan: completion time f1, eavesdropper
// side-lobe sum f2 and swarm energy f3, plus the constraint checker.

#pragma once

#include <limits>
#include <string>
#include <vector>

#include "vaamoo/beamforming.hpp"
#include "vaamoo/scenario.hpp"
#include "vaamoo/solution.hpp"

namespace vaamoo {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct ObjectiveVector {
    double f1 = 0.0;  // seconds
    double f2 = 0.0;  // sum of |AF(eve)| / |AF(mainlobe)|
    double f3 = 0.0;  // joules

    [[nodiscard]] bool finite() const;
    /// 20 log10(f2).
    [[nodiscard]] double f2_db() const;
    /// 10 log10(f2).
    [[nodiscard]] double f2_db_power() const;

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

struct MissionBreakdown {
    double t_g2a = 0.0;
    double t_a2a = 0.0;
    double t_a2g_perf = 0.0;  // +inf when a repositioning leg is too fast
    double t_a2g_tran = 0.0;
    std::vector<double> g2a_rates;   // per cluster, bits/s
    std::vector<double> a2a_rates;   // per cluster, slowest broadcast link from A_h
    std::vector<double> a2g_rates;   // per base station index
    std::vector<double> tran_times;  // per base station index
    /// Leg energies indexed [base station][uav]; +inf for an infeasible leg.
    std::vector<std::vector<double>> leg_energies;
    bool speed_feasible = true;

    [[nodiscard]] double total() const { return t_g2a + t_a2a + t_a2g_perf + t_a2g_tran; }
};

struct MopOptions {
    double quadrature_step_deg = 1.0;
    PerfTimeLimits perf_time;
};

struct ConstraintViolation {
    std::string constraint;  // short name, e.g. "separation"
    std::string detail;
};

/// Evaluates solutions against one scenario. Immutable after construction,
/// so const calls may run concurrently.
class Evaluator {
public:
    explicit Evaluator(const Scenario& s, MopOptions options = {});

    [[nodiscard]] const Scenario& scenario() const { return scenario_; }
    [[nodiscard]] const MopOptions& options() const { return options_; }
    [[nodiscard]] const AngularGrid& grid() const { return grid_; }

    /// Completion time and its phase breakdown. Zero rates with data left
    /// to send, or too-fast legs, give +inf.
    [[nodiscard]] double evaluate_f1(const Solution& x, MissionBreakdown* breakdown = nullptr) const;
    [[nodiscard]] double evaluate_f2(const Solution& x) const;
    [[nodiscard]] double evaluate_f3(const Solution& x) const;
    [[nodiscard]] ObjectiveVector evaluate(const Solution& x, MissionBreakdown* breakdown = nullptr) const;

    /// Every violated bound, selection count, index, order and separation
    /// rule. Never throws.
    [[nodiscard]] std::vector<ConstraintViolation> check_constraints(const Solution& x) const;

    /// GVAA of cluster h: selected sensors, steered at UAV A_h's initial position.
    [[nodiscard]] ArraySpec ground_array(const Solution& x, std::size_t h) const;
    /// AVAA for base station k: UAVs at P[k], steered at base station k.
    [[nodiscard]] ArraySpec aerial_array(const Solution& x, std::size_t k) const;

private:
    void run_mission(const Solution& x, MissionBreakdown& out, double* energy) const;
    [[nodiscard]] double sll_or_inf(const ArraySpec& spec, ElementMask mask, Vec3 origin) const;

    Scenario scenario_;
    MopOptions options_;
    AngularGrid grid_;
    std::vector<Vec3> initial_;
    std::vector<double> broadcast_rate_;  // slowest A2A link from each UAV
    double total_data_ = 0.0;
};

/// Centroid of the UAV positions of one configuration.
Vec3 swarm_centroid(const std::vector<Vec3>& positions);

}  // namespace vaamoo
