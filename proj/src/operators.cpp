// SPDX-License-Identifier: Apache-2.0

#include "vaamoo/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vaamoo {

std::vector<std::uint8_t> swap_mutation(std::vector<std::uint8_t> column, Rng& rng) {
    if (column.size() < 2) return column;
    std::size_t r1 = rng.index(column.size());
    std::size_t r2 = rng.index(column.size() - 1);
    if (r2 >= r1) ++r2;
    std::swap(column[r1], column[r2]);
    return column;
}

bool is_permutation_of_iota(std::span<const std::size_t> p) {
    std::vector<std::uint8_t> seen(p.size(), 0);
    for (auto v : p) {
        if (v >= p.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<std::size_t> pmx(std::span<const std::size_t> p1, std::span<const std::size_t> p2, std::size_t lo,
                             std::size_t hi) {
    const std::size_t n = p1.size();
    if (p2.size() != n) throw std::invalid_argument("PMX parents differ in length");
    if (n == 0) return {};
    if (lo > hi || hi >= n) throw std::invalid_argument("PMX cut points out of range");

    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> child(n, kUnset);
    std::vector<std::size_t> pos_in_p2(n);
    std::vector<std::uint8_t> in_segment(n, 0);
    for (std::size_t i = 0; i < n; ++i) pos_in_p2[p2[i]] = i;
    for (std::size_t i = lo; i <= hi; ++i) {
        child[i] = p1[i];
        in_segment[p1[i]] = 1;
    }
    // Place p2's segment values that p1's segment displaced.
    for (std::size_t i = lo; i <= hi; ++i) {
        const std::size_t v = p2[i];
        if (in_segment[v]) continue;
        std::size_t pos = i;
        while (pos >= lo && pos <= hi) pos = pos_in_p2[p1[pos]];
        child[pos] = v;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (child[i] == kUnset) child[i] = p2[i];
    return child;
}

std::vector<std::size_t> pmx(std::span<const std::size_t> p1, std::span<const std::size_t> p2, Rng& rng) {
    if (p1.empty()) return {};
    std::size_t a = rng.index(p1.size());
    std::size_t b = rng.index(p1.size());
    if (a > b) std::swap(a, b);
    return pmx(p1, p2, a, b);
}

double levy_step(double exponent, Rng& rng) {
    if (!(exponent > 1.0 && exponent < 3.0)) throw std::invalid_argument("Levy exponent must lie in (1, 3)");
    // Mantegna uses the stability index beta = exponent - 1 in (0, 2).
    const double beta = exponent - 1.0;
    const double num = std::tgamma(1.0 + beta) * std::sin(std::numbers::pi * beta / 2.0);
    const double den = std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
    const double sigma_u = std::pow(num / den, 1.0 / beta);
    const double u = rng.normal(0.0, sigma_u);
    const double v = rng.normal();
    return u / std::pow(std::abs(v), 1.0 / beta);
}

double weierstrass(double x, const WeierstrassParams& params) {
    double sum = 0.0;
    double an = 1.0;
    double bn = 1.0;
    for (std::size_t n = 0; n < params.n_terms; ++n) {
        sum += an * std::cos(bn * std::numbers::pi * x);
        an *= params.a;
        bn *= params.b;
    }
    return sum;
}

std::vector<double> weierstrass_lattice(std::size_t count, double phase, const WeierstrassParams& params) {
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double l = count > 1 ? static_cast<double>(i) / static_cast<double>(count - 1) : 0.0;
        v[i] = weierstrass(l + phase, params);
    }
    if (v.empty()) return v;
    const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    const double lo = *mn, span = *mx - *mn;
    for (auto& x : v) x = span > 0.0 ? std::clamp((x - lo) / span, 0.0, 1.0) : 0.5;
    return v;
}

double c1_schedule(std::size_t t, std::size_t t_max) {
    if (t_max == 0) return 2.0;
    const double r = 4.0 * static_cast<double>(t) / static_cast<double>(t_max);
    return 2.0 * std::exp(-r * r);
}

double sine_map(double x) { return std::clamp(std::sin(std::numbers::pi * x), 0.0, 1.0); }

double gauss_map(double x) {
    if (x == 0.0) return 1.0;
    const double inv = 1.0 / x;
    return std::clamp(inv - std::floor(inv), 0.0, 1.0);
}

ChaosState update_params(const ChaosState& state, std::size_t t, std::size_t t_max) {
    if (t > t_max) throw std::invalid_argument("iteration beyond t_max");
    return {c1_schedule(t, t_max), sine_map(state.c2), gauss_map(state.c3), t};
}

}  // namespace vaamoo
