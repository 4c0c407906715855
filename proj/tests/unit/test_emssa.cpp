// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "vaamoo/emssa.hpp"

using namespace vaamoo;

namespace {

Scenario tiny_world(std::uint64_t seed, std::size_t n_uav = 4) {
    ScenarioConfig cfg;
    cfg.n_iot = 2;
    cfg.n_sensors = 6;
    cfg.n_select = 3;
    cfg.n_uav = n_uav;
    cfg.n_bs = 2;
    return generate_scenario(cfg, seed);
}

OptimizerParams quick_params(std::uint64_t seed) {
    OptimizerParams p;
    p.pop_size = 8;
    p.max_iters = 5;
    p.archive_capacity = 20;
    p.rng_seed = seed;
    p.mop.quadrature_step_deg = 6.0;
    return p;
}

double min_separation(const std::vector<Vec3>& pts) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, distance(pts[i], pts[j]));
    return best;
}

bool within(const Solution& x, const ContinuousBounds& b) {
    const auto v = continuous_vector(x);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] < b.lower[i] || v[i] > b.upper[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("initialization satisfies structure, bounds and constraints") {
    const auto s = tiny_world(3);
    const OptimizerParams p;
    const Evaluator ev(s, p.mop);
    const auto bounds = continuous_bounds(s, p.mop.perf_time);
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const auto x = (i % 2) ? init_solution(s, p, rng) : init_solution_uniform(s, p, rng);
        for (const auto& col : x.selection)
            CHECK(static_cast<std::size_t>(std::count(col.begin(), col.end(), 1)) == s.n_select);
        CHECK(within(x, bounds));
        CHECK(ev.check_constraints(x).empty());
    }
}

TEST_CASE("repair clamps weights and separates coincident UAVs") {
    const auto s = tiny_world(4);
    const OptimizerParams p;
    const auto bounds = continuous_bounds(s, p.mop.perf_time);
    Rng rng(2);
    auto x = init_solution(s, p, rng);
    const auto clean = x;
    repair_constraints(x, s, p, bounds, rng);
    CHECK(x == clean);

    x.sensor_weights[0][0] = 1.3;
    x.uav_weights[1][2] = -0.2;
    x.positions[0][1] = x.positions[0][0];
    x.positions[1][3] = x.positions[1][2] = x.positions[1][0];
    repair_constraints(x, s, p, bounds, rng);
    CHECK(x.sensor_weights[0][0] == 1.0);
    CHECK(x.uav_weights[1][2] == 0.0);
    for (const auto& cfg : x.positions) CHECK(min_separation(cfg) >= s.d_min);
    CHECK(within(x, bounds));
    CHECK(Evaluator(s, p.mop).check_constraints(x).empty());
}

TEST_CASE("salp update keeps the encoding valid") {
    const auto s = tiny_world(5);
    const OptimizerParams p;
    const auto bounds = continuous_bounds(s, p.mop.perf_time);
    Rng rng(8);
    const auto best = init_solution(s, p, rng);
    auto prev = init_solution(s, p, rng);
    ChaosStreams chaos{0.3, 0.7};
    for (int i = 0; i < 300; ++i) {
        const auto x = init_solution(s, p, rng);
        const double c1 = c1_schedule(i % 11, 10);
        auto lead = update_solution(x, best, nullptr, SalpRole::Leader, c1, &chaos, 0, 0, bounds, s, rng);
        auto follow = update_solution(x, best, &prev, SalpRole::Follower, c1, nullptr, 0.5, 0.5, bounds, s, rng);
        for (auto* y : {&lead, &follow}) {
            CHECK_NOTHROW(check_structure(*y, s));
            for (const auto& col : y->selection)
                CHECK(static_cast<std::size_t>(std::count(col.begin(), col.end(), 1)) == s.n_select);
        }
        // A follower's continuous part is the midpoint with its predecessor; repair clamps later.
        const auto a = continuous_vector(x), b = continuous_vector(prev), f = continuous_vector(follow);
        for (std::size_t d = 0; d < f.size(); ++d) CHECK(f[d] == doctest::Approx(0.5 * (a[d] + b[d])));
        prev = lead;
    }
}

TEST_CASE("zero iterations archive the non-dominated initial population") {
    const auto s = tiny_world(6);
    auto p = quick_params(3);
    p.max_iters = 0;
    p.archive_capacity = Archive::kUnbounded;
    const auto r = run_emssa(s, p);
    CHECK(r.evaluations == p.pop_size);
    REQUIRE(r.history.size() == 1);

    // Rebuild the initial population from the archived objectives: every
    // entry must be non-dominated by every other.
    for (const auto& a : r.archive)
        for (const auto& b : r.archive) CHECK_FALSE(dominates(a.objectives, b.objectives));
    const Evaluator ev(s, p.mop);
    for (const auto& e : r.archive) {
        CHECK(e.id < p.pop_size);
        CHECK(ev.evaluate(e.solution) == e.objectives);
    }
}

TEST_CASE("runs are deterministic and independent of evaluation threads") {
    const auto s = tiny_world(7);
    auto p = quick_params(42);
    const auto a = run_result_to_json(run_emssa(s, p));
    CHECK(a == run_result_to_json(run_emssa(s, p)));
    p.eval_threads = 3;
    CHECK(a == run_result_to_json(run_emssa(s, p)));
    p.eval_threads = 1;
    p.rng_seed = 43;
    CHECK(a != run_result_to_json(run_emssa(s, p)));
}

TEST_CASE("archive invariants over a run") {
    const auto s = tiny_world(8);
    auto p = quick_params(9);
    p.max_iters = 12;
    p.archive_capacity = 6;
    const auto r = run_emssa(s, p);
    CHECK(r.history.size() == p.max_iters + 1);
    CHECK(r.evaluations == p.pop_size * (p.max_iters + 1));
    CHECK(r.archive.size() <= p.archive_capacity);
    const Evaluator ev(s, p.mop);
    for (const auto& e : r.archive) {
        CHECK(ev.check_constraints(e.solution).empty());
        CHECK(e.objectives.finite());
    }
    // The per-objective extremes are protected, so the best f1 never gets worse.
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& snap : r.history) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& row : snap.archive) best = std::min(best, row.objectives.f1);
        CHECK(best <= prev);
        prev = best;
    }
    CHECK(r.best(0) == prev);
}

TEST_CASE("parameter validation") {
    OptimizerParams p;
    CHECK_NOTHROW(validate_params(p));
    auto bad = p;
    bad.pop_size = 0;
    CHECK_THROWS_AS(validate_params(bad), std::invalid_argument);
    bad = p;
    bad.archive_capacity = 0;
    CHECK_THROWS_AS(validate_params(bad), std::invalid_argument);
    bad = p;
    bad.levy.exponent = 3.0;
    CHECK_THROWS_AS(validate_params(bad), std::invalid_argument);
    bad = p;
    bad.c2_seed = 1.5;
    CHECK_THROWS_AS(validate_params(bad), std::invalid_argument);
    bad = p;
    bad.mop.quadrature_step_deg = 7.0;
    CHECK_THROWS_AS(validate_params(bad), std::invalid_argument);
}
