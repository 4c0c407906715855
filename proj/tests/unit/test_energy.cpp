// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "vaamoo/energy.hpp"
#include "vaamoo/errors.hpp"
#include "vaamoo/rng.hpp"

using namespace vaamoo;

namespace {

double oracle_power(double v) {
    const double pb = 79.86, pi = 88.63, vtip = 120.0, v0 = 4.03, rho = 1.225, a = 0.503, d0 = 0.6, s = 0.05;
    return pb * (1 + 3 * v * v / (vtip * vtip)) +
           pi * std::sqrt(std::sqrt(1 + std::pow(v, 4) / (4 * std::pow(v0, 4))) - v * v / (2 * v0 * v0)) +
           0.5 * d0 * rho * s * a * v * v * v;
}

// Integrates along the sampled straight-line trajectory: speed from finite
// differences of position, potential from the per-step height change.
double integrated_leg(const FlightLeg& leg, const EnergyParams& p, int steps) {
    const double dt = leg.duration / steps;
    auto at = [&](int i) {
        const double f = static_cast<double>(i) / steps;
        return leg.start + f * (leg.end - leg.start);
    };
    double e = 0.0;
    for (int i = 0; i < steps; ++i) {
        const Vec3 a = at(i), b = at(i + 1);
        e += oracle_power(distance(a, b) / dt) * dt + p.uav_mass_kg * p.gravity * (b.z - a.z);
    }
    if (leg.end.z < leg.start.z) e = std::max(e, p.hover_power_w() * leg.duration);
    return e;
}

}  // namespace

TEST_CASE("hover power") {
    const EnergyParams p;
    CHECK(propulsion_power(0.0, p) == p.p_blade_w + p.p_induced_w);
    CHECK(propulsion_power(0.0, p) == doctest::Approx(168.49));
    CHECK(propulsion_power(1e-9, p) == doctest::Approx(168.49));
    CHECK_THROWS_AS((void)propulsion_power(-1.0, p), DomainError);
}

TEST_CASE("propulsion power matches the formula oracle") {
    const EnergyParams p;
    for (double v : {5.0, 10.0, 20.0, 0.3, 27.5})
        CHECK(propulsion_power(v, p) == doctest::Approx(oracle_power(v)).epsilon(1e-9));
}

TEST_CASE("hover energy") {
    const EnergyParams p;
    CHECK(hover_energy(0.0, p) == 0.0);
    CHECK(hover_energy(10.0, p) == doctest::Approx(1684.9));
    CHECK(hover_energy(3.0, p) + hover_energy(4.5, p) == doctest::Approx(hover_energy(7.5, p)));
    CHECK_THROWS_AS((void)hover_energy(-1.0, p), DomainError);
}

TEST_CASE("leg energy examples") {
    const EnergyParams p;
    CHECK(leg_energy({{1, 2, 100}, {1, 2, 100}, 7.0}, p) == doctest::Approx(hover_energy(7.0, p)));
    CHECK(leg_energy({{0, 0, 100}, {100, 0, 100}, 10.0}, p) == doctest::Approx(propulsion_power(10.0, p) * 10.0));
    const double level = leg_energy({{0, 0, 100}, {0, 0, 100}, 10.0}, p);
    const double climb = leg_energy({{0, 0, 100}, {0, 0, 110}, 10.0}, p);
    // m g v_z over 10 s, plus the change in propulsion power at 1 m/s
    const double expected = 2.0 * 9.8 * 1.0 * 10.0 + 10.0 * (propulsion_power(1.0, p) - p.hover_power_w());
    CHECK(climb - level == doctest::Approx(expected).epsilon(1e-9));
    CHECK(leg_energy({{0, 0, 120}, {0, 0, 100}, 10.0}, p) >= hover_energy(10.0, p));
}

TEST_CASE("leg errors") {
    const EnergyParams p;
    CHECK_THROWS_AS((void)leg_energy({{0, 0, 100}, {5, 0, 100}, 0.0}, p), InfeasibleLegError);
    CHECK_THROWS_AS((void)leg_energy({{0, 0, 100}, {100, 0, 100}, 1.0}, p), SpeedInfeasibleError);
    CHECK_NOTHROW((void)leg_energy({{0, 0, 100}, {0, 0, 100}, 0.0}, p));
}

TEST_CASE("leg energy depends only on horizontal length, climb and duration") {
    const EnergyParams p;
    const double a = leg_energy({{0, 0, 100}, {30, 40, 110}, 5.0}, p);
    const double b = leg_energy({{10, 10, 100}, {10, 60, 110}, 5.0}, p);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("energy-optimal duration is interior") {
    const EnergyParams p;
    const Vec3 from{0, 0, 100}, to{80, 0, 100};
    double best = 1e300;
    std::size_t best_i = 0, n = 0;
    for (double t = 80.0 / p.v_max; t <= 200.0; t += 0.5, ++n) {
        const double e = leg_energy({from, to, t}, p);
        if (e < best) {
            best = e;
            best_i = n;
        }
    }
    CHECK(best_i > 0);
    CHECK(best_i + 1 < n);
}

TEST_CASE("leg energy matches step-wise integration") {
    const EnergyParams p;
    Rng rng(29);
    for (int i = 0; i < 100; ++i) {
        const Vec3 a{rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(100, 120)};
        const Vec3 b{rng.uniform(-50, 50), rng.uniform(-50, 50), rng.uniform(100, 120)};
        const double t = distance(a, b) / rng.uniform(0.5, p.v_max) + 1e-9;
        const FlightLeg leg{a, b, t};
        CHECK(leg_energy(leg, p) == doctest::Approx(integrated_leg(leg, p, 4000)).epsilon(1e-3));
    }
}
