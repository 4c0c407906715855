// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <algorithm>
#include <cstring>
#include <numbers>

#include "vaamoo/emssa.hpp"
#include "vaamoo/energy.hpp"
#include "vaamoo/errors.hpp"
#include "vaamoo/mop.hpp"

using namespace vaamoo;

namespace {

constexpr double kPi = std::numbers::pi;

Scenario small_world(std::size_t n_iot, std::size_t n_sn, std::size_t n_sel, std::size_t n_uav, std::size_t n_bs,
                     std::uint64_t seed) {
    ScenarioConfig cfg;
    cfg.n_iot = n_iot;
    cfg.n_sensors = n_sn;
    cfg.n_select = n_sel;
    cfg.n_uav = n_uav;
    cfg.n_bs = n_bs;
    return generate_scenario(cfg, seed);
}

Solution random_solution(const Scenario& s, std::uint64_t seed) {
    OptimizerParams p;
    Rng rng(seed);
    return init_solution_uniform(s, p, rng);
}

// ---- straight-line oracle ---------------------------------------------------

struct OracleArray {
    std::vector<Vec3> pos;
    std::vector<double> w;
};

double dot_dir(Vec3 p, double th, double ph) {
    return p.x * std::sin(th) * std::cos(ph) + p.y * std::sin(th) * std::sin(ph) + p.z * std::cos(th);
}

double oracle_af(const OracleArray& a, double lambda, double th0, double ph0, double th, double ph) {
    const double k = 2 * kPi / lambda;
    double re = 0, im = 0;
    for (std::size_t i = 0; i < a.pos.size(); ++i) {
        const double ang = k * (dot_dir(a.pos[i], th, ph) - dot_dir(a.pos[i], th0, ph0));
        re += a.w[i] * std::cos(ang);
        im += a.w[i] * std::sin(ang);
    }
    return std::hypot(re, im);
}

void angles(Vec3 from, Vec3 to, double& th, double& ph) {
    const Vec3 d = to - from;
    th = std::acos(d.z / d.norm());
    ph = std::atan2(d.y, d.x);
}

double oracle_gain(const OracleArray& a, double lambda, double th0, double ph0, double step_deg) {
    const std::size_t nt = static_cast<std::size_t>(std::lround(180.0 / step_deg));
    const double dt = kPi / nt, dp = 2 * kPi / (2 * nt);
    double integral = 0;
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < 2 * nt; ++j) {
            const double th = (i + 0.5) * dt, ph = -kPi + (j + 0.5) * dp;
            const double af = oracle_af(a, lambda, th0, ph0, th, ph);
            integral += af * af * std::sin(th) * dt * dp;
        }
    const double peak = oracle_af(a, lambda, th0, ph0, th0, ph0);
    return 4 * kPi * peak * peak / integral;
}

double oracle_rate(const OracleArray& a, Vec3 rx, const ChannelParams& c, double step_deg) {
    const Vec3 ctr = centroid(a.pos);
    double th, ph;
    angles(ctr, rx, th, ph);
    const double g0 = oracle_gain(a, c.wavelength(), th, ph, step_deg) * c.array_efficiency;
    const double d = distance(ctr, rx);
    const double h = std::max(ctr.z, rx.z);
    const double d2 = horizontal_distance(ctr, rx);
    double plos = 1.0;
    if (h < c.h2) {
        const double d1 = std::max(460 * std::log10(h) - 700, 18.0), p1 = 4300 * std::log10(h) - 3800;
        plos = d2 <= d1 ? 1.0 : d1 / d2 + std::exp(-d2 / p1) * (1 - d1 / d2);
    }
    const double gc = 1.0 / (c.pathloss_const * d * d * (plos * c.mu_los + (1 - plos) * c.mu_nlos));
    double pw = 0;
    for (double w : a.w) pw += w * w * c.p_max_w;
    return c.bandwidth_hz * std::log2(1 + pw * g0 * gc / c.noise_power_w());
}

struct OracleResult {
    double f1, f2, f3;
};

OracleResult oracle_mission(const Scenario& s, const Solution& x, double step_deg) {
    const auto& c = s.channel;
    double t_g2a = 0, t_a2a = 0, f2 = 0, total_bits = 0;
    for (std::size_t h = 0; h < s.n_iot(); ++h) {
        OracleArray a;
        for (std::size_t i = 0; i < s.clusters[h].sensors.size(); ++i)
            if (x.selection[h][i]) {
                a.pos.push_back(s.clusters[h].sensors[i].position);
                a.w.push_back(x.sensor_weights[h][i]);
            }
        const Vec3 rx = s.uavs[x.receiver[h]].position;
        const double bits = s.clusters[h].data_volume_bits;
        total_bits += bits;
        t_g2a = std::max(t_g2a, bits / oracle_rate(a, rx, c, step_deg));
        double min_rate = 1e300;
        for (std::size_t j = 0; j < s.n_uav(); ++j) {
            if (j == x.receiver[h]) continue;
            const double d = distance(rx, s.uavs[j].position);
            min_rate = std::min(min_rate, c.bandwidth_hz * std::log2(1 + c.p_max_w / (d * d) / (c.pathloss_const * c.noise_power_w())));
        }
        t_a2a += bits / min_rate;
        double th0, ph0, th, ph;
        angles(centroid(a.pos), rx, th0, ph0);
        angles(centroid(a.pos), s.eavesdropper, th, ph);
        f2 += oracle_af(a, c.wavelength(), th0, ph0, th, ph) / oracle_af(a, c.wavelength(), th0, ph0, th0, ph0);
    }
    double f1 = t_g2a + t_a2a, f3 = 0;
    std::vector<Vec3> prev = s.uav_positions();
    for (std::size_t k : x.bs_order) {
        OracleArray a{x.positions[k], x.uav_weights[k]};
        const double t_tran = total_bits / oracle_rate(a, s.base_stations[k], c, step_deg);
        f1 += x.perf_time[k] + t_tran;
        for (std::size_t j = 0; j < s.n_uav(); ++j) {
            const double len = distance(prev[j], x.positions[k][j]);
            const double dz = x.positions[k][j].z - prev[j].z;
            double e = propulsion_power(len / x.perf_time[k], s.energy) * x.perf_time[k] + s.energy.uav_mass_kg * s.energy.gravity * dz;
            if (dz < 0) e = std::max(e, s.energy.hover_power_w() * x.perf_time[k]);
            f3 += e + s.energy.hover_power_w() * t_tran;
        }
        double th0, ph0, th, ph;
        angles(centroid(a.pos), s.base_stations[k], th0, ph0);
        angles(centroid(a.pos), s.eavesdropper, th, ph);
        f2 += oracle_af(a, c.wavelength(), th0, ph0, th, ph) / oracle_af(a, c.wavelength(), th0, ph0, th0, ph0);
        prev = x.positions[k];
    }
    f3 += s.n_uav() * s.energy.hover_power_w() * t_a2a;
    return {f1, f2, f3};
}

}  // namespace

TEST_CASE("decision-variable count") {
    CHECK(solution_length(2, 50, 16, 8) == 730);
    CHECK(solution_length(4, 50, 32, 8) == 1444);
    CHECK(solution_length(1, 1, 1, 1) == 9);
    const auto s = small_world(2, 7, 3, 5, 3, 1);
    // Continuous part plus one A entry per cluster and one Q entry per BS;
    // D adds N_SN per cluster.
    CHECK(continuous_size(s) + 2 * 7 + 2 + 3 == solution_length(2, 7, 5, 3));
}

TEST_CASE("evaluation matches the straight-line oracle") {
    const auto s = small_world(2, 6, 3, 4, 2, 21);
    MopOptions opt;
    opt.quadrature_step_deg = 6.0;
    const Evaluator ev(s, opt);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const auto x = random_solution(s, seed);
        const auto got = ev.evaluate(x);
        const auto want = oracle_mission(s, x, 6.0);
        REQUIRE(got.finite());
        CHECK(got.f1 == doctest::Approx(want.f1).epsilon(1e-6));
        CHECK(got.f2 == doctest::Approx(want.f2).epsilon(1e-9));
        CHECK(got.f3 == doctest::Approx(want.f3).epsilon(1e-6));
    }
}

TEST_CASE("no data leaves only repositioning") {
    auto s = small_world(2, 6, 3, 4, 3, 5);
    for (auto& c : s.clusters) c.data_volume_bits = 0.0;
    const Evaluator ev(s);
    auto x = random_solution(s, 4);
    // Slow enough that every leg is within the speed limit.
    for (auto& t : x.perf_time) t = 60.0;
    const double sum_t = 60.0 * static_cast<double>(s.n_bs());
    CHECK(ev.evaluate_f1(x) == sum_t);

    // Staying put at the initial deployment costs hover energy only.
    for (auto& row : x.positions) row = s.uav_positions();
    CHECK(ev.evaluate_f3(x) == doctest::Approx(s.n_uav() * hover_energy(sum_t, s.energy)));
}

TEST_CASE("one UAV flying a level leg") {
    ScenarioConfig cfg;
    cfg.n_iot = 1, cfg.n_sensors = 3, cfg.n_select = 2, cfg.n_uav = 1, cfg.n_bs = 1, cfg.data_volume_bits = 0.0;
    const auto s = generate_scenario(cfg, 2);
    const Evaluator ev(s);
    Solution x = blank_solution(s);
    x.selection[0] = {1, 1, 0};
    x.sensor_weights[0] = {1, 1, 1};
    x.uav_weights[0] = {1};
    Vec3 p = s.uavs[0].position;
    p.x -= 100.0;
    x.positions[0] = {p};
    x.perf_time[0] = 10.0;
    MissionBreakdown b;
    const auto o = ev.evaluate(x, &b);
    CHECK(b.t_a2a == 0.0);
    CHECK(o.f1 == 10.0);
    CHECK(o.f3 == doctest::Approx(propulsion_power(10.0, s.energy) * 10.0));
}

TEST_CASE("degenerate physics gives infinite objectives") {
    const auto s = small_world(2, 6, 3, 4, 2, 8);
    const Evaluator ev(s);
    const auto x = random_solution(s, 1);
    auto silent = x;
    std::fill(silent.sensor_weights[1].begin(), silent.sensor_weights[1].end(), 0.0);
    CHECK(std::isinf(ev.evaluate_f1(silent)));
    CHECK(std::isinf(ev.evaluate_f2(silent)));

    // Crossing the whole region in one second is beyond v_max.
    auto rushed = x;
    const std::size_t first = rushed.bs_order[0];
    rushed.perf_time[first] = 1.0;
    for (auto& p : rushed.positions[first]) p = {s.uav_region.max_x(), s.uav_region.max_y(), p.z};
    rushed.positions[first][0] = {s.uav_region.min_x(), s.uav_region.min_y(), s.altitude_band.low};
    MissionBreakdown b;
    const auto o = ev.evaluate(rushed, &b);
    CHECK_FALSE(b.speed_feasible);
    CHECK(std::isinf(o.f1));
    CHECK(std::isinf(o.f3));
    CHECK(std::isfinite(o.f2));
}

TEST_CASE("structural errors are distinct from infinite objectives") {
    const auto s = small_world(2, 6, 3, 4, 2, 8);
    const Evaluator ev(s);
    auto x = random_solution(s, 1);
    x.bs_order = {0, 0};
    CHECK_THROWS_AS((void)ev.evaluate(x), InvalidSolutionError);
    auto y = random_solution(s, 1);
    y.receiver[0] = 4;
    CHECK_THROWS_AS((void)ev.evaluate(y), InvalidSolutionError);
    auto z = random_solution(s, 1);
    z.selection[0][0] = 2;
    CHECK_THROWS_AS((void)ev.evaluate(z), InvalidSolutionError);
}

TEST_CASE("side-lobe objective") {
    // One element everywhere: every ratio is exactly 1.
    ScenarioConfig cfg;
    cfg.n_iot = 2, cfg.n_sensors = 3, cfg.n_select = 1, cfg.n_uav = 1, cfg.n_bs = 3;
    const auto s = generate_scenario(cfg, 4);
    const Evaluator ev(s);
    const auto x = random_solution(s, 2);
    CHECK(ev.evaluate_f2(x) == doctest::Approx(5.0).epsilon(1e-12));

    // An eavesdropper standing at a base station sits on that array's mainlobe.
    auto t = small_world(1, 6, 3, 4, 2, 3);
    const auto y = random_solution(t, 5);
    t.eavesdropper = t.base_stations[0];
    const Evaluator ev2(t);
    const Vec3 ctr = centroid(y.positions[0]);
    CHECK(sll_ratio(ev2.aerial_array(y, 0), {}, direction_between(ctr, t.eavesdropper)) == doctest::Approx(1.0));
}

TEST_CASE("scaling one array's weights") {
    const auto s = small_world(2, 10, 5, 6, 3, 12);
    const Evaluator ev(s);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto x = random_solution(s, seed);
        auto y = x;
        for (auto& w : y.uav_weights[1]) w *= 0.5;
        const Vec3 ctr = centroid(x.positions[1]);
        const Direction eve = direction_between(ctr, s.eavesdropper);
        CHECK(sll_ratio(ev.aerial_array(y, 1), {}, eve) ==
              doctest::Approx(sll_ratio(ev.aerial_array(x, 1), {}, eve)).epsilon(1e-12));
        CHECK(ev.evaluate_f1(y) >= ev.evaluate_f1(x));
    }
}

TEST_CASE("service order only matters through leg sequencing") {
    const auto s = small_world(2, 6, 3, 4, 4, 6);
    const Evaluator ev(s);
    auto x = random_solution(s, 3);
    for (auto& row : x.positions) row = x.positions[0];
    for (auto& row : x.uav_weights) row = x.uav_weights[0];
    for (auto& t : x.perf_time) t = 30.0;
    const double f3 = ev.evaluate_f3(x);
    auto y = x;
    std::reverse(y.bs_order.begin(), y.bs_order.end());
    CHECK(ev.evaluate_f3(y) == doctest::Approx(f3).epsilon(1e-12));
}

TEST_CASE("breakdown adds up and evaluation is pure") {
    const auto s = small_world(2, 8, 4, 5, 3, 14);
    const Evaluator ev(s);
    const auto x = random_solution(s, 9);
    MissionBreakdown b;
    const auto o = ev.evaluate(x, &b);
    CHECK(o.f1 == b.t_g2a + b.t_a2a + b.t_a2g_perf + b.t_a2g_tran);
    const auto again = ev.evaluate(x);
    CHECK(std::memcmp(&o, &again, sizeof o) == 0);
    CHECK(ev.evaluate_f1(x) == o.f1);
    CHECK(ev.evaluate_f2(x) == o.f2);
    CHECK(ev.evaluate_f3(x) == o.f3);
}

TEST_CASE("constraint checker") {
    const auto s = small_world(2, 8, 4, 5, 3, 14);
    const Evaluator ev(s);
    OptimizerParams p;
    Rng rng(1);
    auto x = init_solution(s, p, rng);
    CHECK(ev.check_constraints(x).empty());

    auto close = x;
    close.positions[0][1] = close.positions[0][0] + Vec3{0.3, 0.0, 0.0};
    for (std::size_t j = 2; j < s.n_uav(); ++j)
        if (distance(close.positions[0][j], close.positions[0][0]) < 2.0) close.positions[0][j].x += 5.0;
    const auto v = ev.check_constraints(close);
    std::size_t separation = 0;
    for (const auto& c : v) separation += c.constraint == "separation";
    CHECK(separation == 1);

    auto bad_q = x;
    bad_q.bs_order = {1, 1, 0};
    const auto vq = ev.check_constraints(bad_q);
    REQUIRE(vq.size() == 1);
    CHECK(vq[0].constraint == "structure");

    auto loose = x;
    loose.sensor_weights[0][0] = 1.3;
    loose.perf_time[0] = 500.0;
    loose.selection[1][0] = !loose.selection[1][0];
    const auto vl = ev.check_constraints(loose);
    auto has = [&](const std::string& c) {
        for (const auto& e : vl)
            if (e.constraint == c) return true;
        return false;
    };
    CHECK(has("sensor_weight"));
    CHECK(has("perf_time"));
    CHECK(has("selection_count"));
}

TEST_CASE("solution JSON round trip") {
    const auto s = small_world(2, 5, 2, 3, 2, 1);
    const auto x = random_solution(s, 7);
    const auto j = solution_to_json(x);
    for (const char* key : {"D", "A", "Q", "I_SN", "P", "I_UAV", "T_perf"}) CHECK(j.contains(key));
    CHECK(solution_from_json(j) == x);
    auto broken = j;
    broken["P"][0][1] = {1.0, 2.0};
    CHECK_THROWS_AS(solution_from_json(broken), SchemaError);
}

TEST_CASE("continuous flattening round trip") {
    const auto s = small_world(2, 5, 2, 3, 2, 1);
    auto x = random_solution(s, 7);
    const auto v = continuous_vector(x);
    CHECK(v.size() == continuous_size(s));
    const auto b = continuous_bounds(s, {});
    CHECK(b.lower.size() == v.size());
    auto y = blank_solution(s);
    y.selection = x.selection;
    y.receiver = x.receiver;
    y.bs_order = x.bs_order;
    assign_continuous(y, v);
    CHECK(y == x);
}
