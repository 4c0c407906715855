// SPDX-License-Identifier: Apache-2.0

#include "vaamoo/archive.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace vaamoo {

double objective(const ObjectiveVector& v, std::size_t m) {
    switch (m) {
        case 0: return v.f1;
        case 1: return v.f2;
        case 2: return v.f3;
        default: throw std::out_of_range("objective index");
    }
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    bool strict = false;
    for (std::size_t m = 0; m < 3; ++m) {
        const double x = objective(a, m), y = objective(b, m);
        if (x > y) return false;
        if (x < y) strict = true;
    }
    return strict;
}

Archive::Archive(std::size_t capacity, std::size_t divisions, std::uint64_t trim_seed)
    : capacity_(capacity), divisions_(divisions), trim_rng_(trim_seed) {
    if (capacity == 0) throw std::invalid_argument("archive capacity must be positive");
    if (divisions == 0) throw std::invalid_argument("grid divisions must be positive");
}

GridCell Archive::cell_of(const ObjectiveVector& v) const {
    GridCell c{};
    for (std::size_t m = 0; m < 3; ++m) {
        const double span = hi_[m] - lo_[m];
        if (!(span > 0.0)) continue;
        const double t = (objective(v, m) - lo_[m]) / span * static_cast<double>(divisions_);
        c[m] = static_cast<std::size_t>(std::clamp(std::floor(t), 0.0, static_cast<double>(divisions_ - 1)));
    }
    return c;
}

void Archive::rebuild_grid() {
    if (entries_.empty()) return;
    for (std::size_t m = 0; m < 3; ++m) {
        lo_[m] = hi_[m] = objective(entries_.front().objectives, m);
        for (const auto& e : entries_) {
            lo_[m] = std::min(lo_[m], objective(e.objectives, m));
            hi_[m] = std::max(hi_[m], objective(e.objectives, m));
        }
    }
    for (auto& e : entries_) e.grid_cell = cell_of(e.objectives);
}

InsertOutcome Archive::insert(Solution solution, ObjectiveVector objectives, std::uint64_t id) {
    if (!objectives.finite()) return InsertOutcome::NonFinite;
    for (const auto& e : entries_) {
        if (e.objectives == objectives) return InsertOutcome::Duplicate;
        if (dominates(e.objectives, objectives)) return InsertOutcome::Dominated;
    }
    std::erase_if(entries_, [&](const ArchiveEntry& e) { return dominates(objectives, e.objectives); });
    entries_.push_back({std::move(solution), objectives, {}, id});
    rebuild_grid();
    if (entries_.size() > capacity_) trim();
    return InsertOutcome::Added;
}

std::size_t Archive::best_index(std::size_t m) const {
    if (entries_.empty()) throw std::logic_error("empty archive");
    std::size_t best = 0;
    for (std::size_t i = 1; i < entries_.size(); ++i)
        if (objective(entries_[i].objectives, m) < objective(entries_[best].objectives, m)) best = i;
    return best;
}

void Archive::trim() {
    // The grid stays fixed while removing, so no cell gains members.
    while (entries_.size() > capacity_) {
        std::map<GridCell, std::size_t> occupancy;
        for (const auto& e : entries_) ++occupancy[e.grid_cell];
        std::vector<std::uint8_t> is_protected(entries_.size(), 0);
        for (std::size_t m = 0; m < 3; ++m) is_protected[best_index(m)] = 1;

        std::vector<std::size_t> candidates;
        std::vector<double> weights;
        double total = 0.0;
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (is_protected[i]) continue;
            candidates.push_back(i);
            const double w = static_cast<double>(occupancy[entries_[i].grid_cell] - 1);
            weights.push_back(w);
            total += w;
        }
        if (candidates.empty()) break;  // capacity below the number of protected extremes
        std::size_t victim = candidates.back();
        if (total > 0.0) {
            double r = trim_rng_.uniform() * total;
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                if (weights[c] <= 0.0) continue;
                victim = candidates[c];
                if (r < weights[c]) break;
                r -= weights[c];
            }
        } else {
            victim = candidates[trim_rng_.index(candidates.size())];
        }
        entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(victim));
    }
    rebuild_grid();
}

const ArchiveEntry& Archive::select_leader(Rng& rng) const {
    if (entries_.empty()) throw std::logic_error("leader selection from an empty archive");
    std::map<GridCell, std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < entries_.size(); ++i) cells[entries_[i].grid_cell].push_back(i);
    double total = 0.0;
    for (const auto& [cell, members] : cells) total += 1.0 / static_cast<double>(members.size());
    double r = rng.uniform() * total;
    const std::vector<std::size_t>* chosen = &cells.rbegin()->second;
    for (const auto& [cell, members] : cells) {
        const double w = 1.0 / static_cast<double>(members.size());
        if (r < w) {
            chosen = &members;
            break;
        }
        r -= w;
    }
    return entries_[(*chosen)[rng.index(chosen->size())]];
}

}  // namespace vaamoo
