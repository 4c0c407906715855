// SPDX-License-Identifier: Apache-2.0
//
// Pareto dominance and a bounded archive of mutually non-dominated
// solutions with an adaptive hypercube grid for crowding.

#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "vaamoo/mop.hpp"
#include "vaamoo/rng.hpp"
#include "vaamoo/solution.hpp"

namespace vaamoo {

/// Minimization: a <= b everywhere and a < b somewhere.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

using GridCell = std::array<std::size_t, 3>;

struct ArchiveEntry {
    Solution solution;
    ObjectiveVector objectives;
    GridCell grid_cell{};
    std::uint64_t id = 0;
};

enum class InsertOutcome { Added, Dominated, Duplicate, NonFinite };

class Archive {
public:
    static constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

    /// `trim_seed` seeds the stream used for roulette removal.
    explicit Archive(std::size_t capacity = 100, std::size_t divisions = 10, std::uint64_t trim_seed = 0);

    /// Adds the entry unless a member dominates it or has the same
    /// objectives; drops members it dominates, then trims to capacity.
    InsertOutcome insert(Solution solution, ObjectiveVector objectives, std::uint64_t id = 0);

    /// Removes members until size() <= capacity(). Roulette over the
    /// removable members with weight (cell occupancy - 1), uniform when all
    /// cells are singletons. The first minimizer of each objective is kept.
    void trim();

    /// Roulette over occupied cells with weight 1 / occupancy, then a
    /// uniform member of the chosen cell. Throws std::logic_error when empty.
    [[nodiscard]] const ArchiveEntry& select_leader(Rng& rng) const;

    [[nodiscard]] const std::vector<ArchiveEntry>& entries() const { return entries_; }
    [[nodiscard]] std::size_t size() const { return entries_.size(); }
    [[nodiscard]] bool empty() const { return entries_.empty(); }
    [[nodiscard]] std::size_t capacity() const { return capacity_; }
    [[nodiscard]] std::size_t divisions() const { return divisions_; }

    /// Index of the first member minimizing objective `m` (0, 1 or 2).
    [[nodiscard]] std::size_t best_index(std::size_t m) const;

    /// Cell of an objective vector under the current grid bounds.
    [[nodiscard]] GridCell cell_of(const ObjectiveVector& v) const;

private:
    void rebuild_grid();

    std::vector<ArchiveEntry> entries_;
    std::size_t capacity_;
    std::size_t divisions_;
    Rng trim_rng_;
    std::array<double, 3> lo_{};
    std::array<double, 3> hi_{};
};

double objective(const ObjectiveVector& v, std::size_t m);

}  // namespace vaamoo
