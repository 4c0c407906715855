// SPDX-License-Identifier: Apache-2.0

#include "vaamoo/emssa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "swarm.hpp"

namespace vaamoo {

using nlohmann::json;

void validate_params(const OptimizerParams& p) {
    auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
    if (p.pop_size < 1) fail("pop_size must be >= 1");
    if (p.archive_capacity < 1) fail("archive_capacity must be >= 1");
    if (p.grid_divisions < 1) fail("grid_divisions must be >= 1");
    const auto& w = p.weierstrass;
    if (!(w.a > 0.0 && w.a < 1.0)) fail("Weierstrass a must lie in (0, 1)");
    if (!(w.a * w.b > 1.0 + 1.5 * std::numbers::pi)) fail("Weierstrass parameters need a*b > 1 + 3*pi/2");
    if (w.n_terms < 1) fail("Weierstrass n_terms must be >= 1");
    if (!(p.levy.exponent > 1.0 && p.levy.exponent < 3.0)) fail("Levy exponent must lie in (1, 3)");
    if (!(p.levy.step_scale_m > 0.0)) fail("Levy step scale must be positive");
    if (!(p.c2_seed > 0.0 && p.c2_seed < 1.0) || !(p.c3_seed > 0.0 && p.c3_seed < 1.0))
        fail("chaos seeds must lie in (0, 1)");
    if (!(p.mop.perf_time.min_s > 0.0 && p.mop.perf_time.min_s <= p.mop.perf_time.max_s))
        fail("T_perf bounds need 0 < min <= max");
    if (!(p.pso.inertia_start >= 0.0 && p.pso.inertia_end >= 0.0)) fail("PSO inertia must be non-negative");
    (void)AngularGrid::from_step_deg(p.mop.quadrature_step_deg);
}

double RunResult::best(std::size_t m) const {
    double b = kInfinity;
    for (const auto& e : archive) b = std::min(b, objective(e.objectives, m));
    return b;
}

namespace {

void init_discrete(Solution& x, const Scenario& s, Rng& rng) {
    for (std::size_t h = 0; h < s.n_iot(); ++h) {
        auto& col = x.selection[h];
        std::fill(col.begin(), col.end(), std::uint8_t{0});
        std::fill_n(col.begin(), std::min(s.n_select, col.size()), std::uint8_t{1});
        std::shuffle(col.begin(), col.end(), rng.engine());
        x.receiver[h] = rng.index(s.n_uav());
    }
    std::iota(x.bs_order.begin(), x.bs_order.end(), std::size_t{0});
    std::shuffle(x.bs_order.begin(), x.bs_order.end(), rng.engine());
}

double nearest_distance(const std::vector<Vec3>& pts, std::size_t j, std::size_t* nearest) {
    double best = kInfinity;
    for (std::size_t m = 0; m < pts.size(); ++m) {
        if (m == j) continue;
        const double d = distance(pts[j], pts[m]);
        if (d < best) {
            best = d;
            if (nearest) *nearest = m;
        }
    }
    return best;
}

Vec3 clamp_position(Vec3 p, const Scenario& s) {
    const auto& r = s.uav_region;
    return {std::clamp(p.x, r.min_x(), r.max_x()), std::clamp(p.y, r.min_y(), r.max_y()),
            std::clamp(p.z, s.altitude_band.low, s.altitude_band.high)};
}

Vec3 uniform_position(const Scenario& s, Rng& rng) {
    const auto& r = s.uav_region;
    return {rng.uniform(r.min_x(), r.max_x()), rng.uniform(r.min_y(), r.max_y()),
            rng.uniform(s.altitude_band.low, s.altitude_band.high)};
}

// Separates one configuration so that every pair is at least d_min apart.
void separate(std::vector<Vec3>& pts, const Scenario& s, const OptimizerParams& params, Rng& rng) {
    const double d_min = s.d_min;
    const std::size_t n = pts.size();
    for (std::size_t pass = 0; pass < 4 * n + 4; ++pass) {
        bool clean = true;
        for (std::size_t j = 0; j < n; ++j) {
            if (nearest_distance(pts, j, nullptr) >= d_min) continue;
            clean = false;
            for (std::size_t a = 0; a < params.max_repair_attempts; ++a) {
                const double step = params.levy.step_scale_m;
                const Vec3 jump{step * levy_step(params.levy.exponent, rng), step * levy_step(params.levy.exponent, rng),
                                step * levy_step(params.levy.exponent, rng)};
                pts[j] = clamp_position(pts[j] + jump, s);
                if (nearest_distance(pts, j, nullptr) >= d_min) break;
            }
            std::size_t nb = 0;
            if (nearest_distance(pts, j, &nb) >= d_min) continue;
            Vec3 away = pts[j] - pts[nb];
            if (!(away.norm() > 0.0)) away = {1.0, 0.0, 0.0};
            pts[j] = clamp_position(pts[nb] + (d_min * (1.0 + 1e-9) / away.norm()) * away, s);
            if (nearest_distance(pts, j, nullptr) >= d_min) continue;
            for (int a = 0; a < 10000; ++a) {
                pts[j] = uniform_position(s, rng);
                if (nearest_distance(pts, j, nullptr) >= d_min) break;
            }
        }
        if (clean) return;
    }
}

}  // namespace

void repair_constraints(Solution& x, const Scenario& s, const OptimizerParams& params, const ContinuousBounds& bounds,
                        Rng& rng) {
    auto v = continuous_vector(x);
    bool changed = false;
    for (std::size_t n = 0; n < v.size(); ++n) {
        const double c = std::clamp(v[n], bounds.lower[n], bounds.upper[n]);
        if (c != v[n]) {
            v[n] = c;
            changed = true;
        }
    }
    if (changed) assign_continuous(x, v);
    for (auto& config : x.positions) separate(config, s, params, rng);
}

Solution init_solution(const Scenario& s, const OptimizerParams& params, Rng& rng) {
    Solution x = blank_solution(s);
    init_discrete(x, s, rng);
    const auto bounds = continuous_bounds(s, params.mop.perf_time);
    const auto lattice = weierstrass_lattice(bounds.lower.size(), rng.uniform(0.0, 2.0), params.weierstrass);
    std::vector<double> v(lattice.size());
    for (std::size_t n = 0; n < v.size(); ++n)
        v[n] = bounds.lower[n] + lattice[n] * (bounds.upper[n] - bounds.lower[n]);
    assign_continuous(x, v);
    repair_constraints(x, s, params, bounds, rng);
    return x;
}

Solution init_solution_uniform(const Scenario& s, const OptimizerParams& params, Rng& rng) {
    Solution x = blank_solution(s);
    init_discrete(x, s, rng);
    const auto bounds = continuous_bounds(s, params.mop.perf_time);
    std::vector<double> v(bounds.lower.size());
    for (std::size_t n = 0; n < v.size(); ++n) v[n] = rng.uniform(bounds.lower[n], bounds.upper[n]);
    assign_continuous(x, v);
    repair_constraints(x, s, params, bounds, rng);
    return x;
}

void update_discrete(Solution& x, const Solution& x_best, double c1, const Scenario& s, Rng& rng) {
    for (std::size_t h = 0; h < s.n_iot(); ++h) {
        const auto& source = rng.uniform() > c1 ? x_best.selection[h] : x.selection[h];
        x.selection[h] = swap_mutation(source, rng);
    }
    for (std::size_t h = 0; h < s.n_iot(); ++h) {
        if (rng.uniform() > c1)
            x.receiver[h] = x_best.receiver[h];
        else
            x.receiver[h] = rng.index(s.n_uav());
    }
    if (rng.uniform() > c1) x.bs_order = pmx(x_best.bs_order, x.bs_order, rng);
}

Solution update_solution(const Solution& x, const Solution& x_best, const Solution* x_prev, SalpRole role, double c1,
                         ChaosStreams* chaos, double fixed_c2, double fixed_c3, const ContinuousBounds& bounds,
                         const Scenario& s, Rng& rng) {
    Solution y = x;
    auto v = continuous_vector(x);
    if (role == SalpRole::Leader) {
        const auto best = continuous_vector(x_best);
        for (std::size_t n = 0; n < v.size(); ++n) {
            const double c2 = chaos ? chaos->next_c2() : fixed_c2;
            const double c3 = chaos ? chaos->next_c3() : fixed_c3;
            const double step = c1 * ((bounds.upper[n] - bounds.lower[n]) * c2 + bounds.lower[n]);
            v[n] = c3 >= 0.5 ? best[n] + step : best[n] - step;
        }
    } else {
        if (!x_prev) throw std::invalid_argument("follower update needs its predecessor");
        const auto prev = continuous_vector(*x_prev);
        for (std::size_t n = 0; n < v.size(); ++n) v[n] = 0.5 * (v[n] + prev[n]);
    }
    assign_continuous(y, v);
    update_discrete(y, x_best, c1, s, rng);
    return y;
}

RunResult run_emssa(const Scenario& s, const OptimizerParams& params) {
    return detail::run_swarm(s, params, detail::SwarmKind::Emssa);
}

json params_to_json(const OptimizerParams& p) {
    return {{"pop_size", p.pop_size},
            {"max_iters", p.max_iters},
            {"archive_capacity", p.archive_capacity},
            {"grid_divisions", p.grid_divisions},
            {"weierstrass", {{"a", p.weierstrass.a}, {"b", p.weierstrass.b}, {"n_terms", p.weierstrass.n_terms}}},
            {"levy", {{"exponent", p.levy.exponent}, {"step_scale_m", p.levy.step_scale_m}}},
            {"max_repair_attempts", p.max_repair_attempts},
            {"c2_seed", p.c2_seed},
            {"c3_seed", p.c3_seed},
            {"pso",
             {{"inertia_start", p.pso.inertia_start},
              {"inertia_end", p.pso.inertia_end},
              {"c_cognitive", p.pso.c_cognitive},
              {"c_social", p.pso.c_social}}},
            {"rng_seed", p.rng_seed},
            {"quadrature_step_deg", p.mop.quadrature_step_deg},
            {"perf_time_bounds_s", {p.mop.perf_time.min_s, p.mop.perf_time.max_s}}};
}

namespace {

json objectives_json(const ObjectiveVector& v) { return {{"f1_s", v.f1}, {"f2_raw", v.f2}, {"f3_j", v.f3}}; }

}  // namespace

std::string run_result_to_json(const RunResult& r) {
    json history = json::array();
    for (const auto& snap : r.history) {
        json rows = json::array();
        for (const auto& row : snap.archive) {
            json o = objectives_json(row.objectives);
            o["solution_id"] = row.solution_id;
            rows.push_back(std::move(o));
        }
        history.push_back({{"iter", snap.iter}, {"archive", std::move(rows)}});
    }
    json archive = json::array();
    for (const auto& e : r.archive)
        archive.push_back({{"solution_id", e.id},
                           {"objectives", objectives_json(e.objectives)},
                           {"solution", solution_to_json(e.solution)}});
    const json doc = {{"algorithm", r.algorithm},
                      {"params", params_to_json(r.params)},
                      {"evaluations", r.evaluations},
                      {"history", std::move(history)},
                      {"archive", std::move(archive)}};
    return doc.dump(1);
}

}  // namespace vaamoo
