// SPDX-License-Identifier: Apache-2.0
//
// Variation operators for the mixed encoding and the parameter schedule:
// swap mutation, partially mapped crossover, Levy steps, the Weierstrass
// initialization lattice and the sine/Gauss chaos maps.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vaamoo/rng.hpp"

namespace vaamoo {

/// Swaps the entries at two distinct random positions r1 < r2. A column of
/// fewer than two entries is returned unchanged.
std::vector<std::uint8_t> swap_mutation(std::vector<std::uint8_t> column, Rng& rng);

/// PMX child of two permutations of {0..n-1}: positions [lo, hi] come from
/// `p1`, the rest from `p2` with conflicts resolved through the segment
/// mapping.
std::vector<std::size_t> pmx(std::span<const std::size_t> p1, std::span<const std::size_t> p2, std::size_t lo,
                             std::size_t hi);
/// PMX with uniformly drawn cut points.
std::vector<std::size_t> pmx(std::span<const std::size_t> p1, std::span<const std::size_t> p2, Rng& rng);

bool is_permutation_of_iota(std::span<const std::size_t> p);

/// Mantegna's algorithm for a Levy-stable step with index `exponent`.
double levy_step(double exponent, Rng& rng);

struct WeierstrassParams {
    double a = 0.5;
    double b = 13.0;
    std::size_t n_terms = 20;
};

/// sum_{n < n_terms} a^n cos(b^n pi x).
double weierstrass(double x, const WeierstrassParams& params);

/// W at `count` equispaced points of [0, 1] shifted by `phase`, min-max
/// normalized to [0, 1]. A constant lattice maps to 0.5.
std::vector<double> weierstrass_lattice(std::size_t count, double phase, const WeierstrassParams& params);

/// 2 exp(-(4 t / t_max)^2); 2 when t_max is 0.
double c1_schedule(std::size_t t, std::size_t t_max);

/// sin(pi x).
double sine_map(double x);
/// 1 at x = 0, otherwise the fractional part of 1 / x.
double gauss_map(double x);

struct ChaosState {
    double c1 = 2.0;
    double c2 = 0.3;
    double c3 = 0.7;
    std::size_t iter = 0;
};

/// Advances c2 and c3 by one map step and sets c1 for iteration t.
ChaosState update_params(const ChaosState& state, std::size_t t, std::size_t t_max);

}  // namespace vaamoo
