// SPDX-License-Identifier: Apache-2.0

#include "swarm.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>
#include <thread>

namespace vaamoo::detail {

namespace {

// Stream tags for derive_seed.
enum : std::uint64_t { kInitStream = 1, kUpdateStream = 2, kIterStream = 3, kTrimStream = 4 };

std::vector<ObjectiveVector> evaluate_all(const Evaluator& ev, const std::vector<Solution>& pop, std::size_t threads) {
    std::vector<ObjectiveVector> out(pop.size());
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(pop.size(), 1));
    if (threads == 1) {
        for (std::size_t i = 0; i < pop.size(); ++i) out[i] = ev.evaluate(pop[i]);
        return out;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < pop.size(); i += threads) out[i] = ev.evaluate(pop[i]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

bool ranks_before(const ObjectiveVector& a, const ObjectiveVector& b) {
    if (a.finite() != b.finite()) return a.finite();
    if (a.f1 != b.f1) return a.f1 < b.f1;
    if (a.f2 != b.f2) return a.f2 < b.f2;
    return a.f3 < b.f3;
}

IterationSnapshot snapshot(std::size_t iter, const Archive& archive) {
    IterationSnapshot snap{iter, {}};
    for (const auto& e : archive.entries()) snap.archive.push_back({e.id, e.objectives});
    return snap;
}

std::vector<double> clamp_to(std::vector<double> v, const ContinuousBounds& b) {
    for (std::size_t n = 0; n < v.size(); ++n) v[n] = std::clamp(v[n], b.lower[n], b.upper[n]);
    return v;
}

}  // namespace

RunResult run_swarm(const Scenario& s, const OptimizerParams& params, SwarmKind kind) {
    validate_params(params);
    const auto started = std::chrono::steady_clock::now();
    const Evaluator ev(s, params.mop);
    const ContinuousBounds bounds = continuous_bounds(s, params.mop.perf_time);
    const std::uint64_t seed = params.rng_seed;
    const std::size_t n_pop = params.pop_size;
    const std::size_t t_max = params.max_iters;

    RunResult result;
    result.algorithm = kind == SwarmKind::Emssa ? "emssa" : kind == SwarmKind::Mssa ? "mssa" : "mopso";
    result.params = params;

    Archive archive(params.archive_capacity, params.grid_divisions, derive_seed(seed, {kTrimStream}));
    std::vector<Solution> pop;
    for (std::size_t i = 0; i < n_pop; ++i) {
        Rng rng(derive_seed(seed, {kInitStream, i}));
        pop.push_back(kind == SwarmKind::Emssa ? init_solution(s, params, rng) : init_solution_uniform(s, params, rng));
    }
    std::vector<ObjectiveVector> objs = evaluate_all(ev, pop, params.eval_threads);
    result.evaluations += n_pop;
    for (std::size_t i = 0; i < n_pop; ++i) archive.insert(pop[i], objs[i], i);
    result.history.push_back(snapshot(0, archive));

    ChaosStreams chaos{params.c2_seed, params.c3_seed};
    std::vector<std::vector<double>> velocity(n_pop, std::vector<double>(bounds.lower.size(), 0.0));
    std::vector<Solution> personal_best = pop;
    std::vector<ObjectiveVector> personal_obj = objs;

    for (std::size_t t = 1; t <= t_max; ++t) {
        const double c1 = c1_schedule(t, t_max);
        Rng iter_rng(derive_seed(seed, {kIterStream, t}));
        std::vector<Solution> next;
        next.reserve(n_pop);

        if (kind == SwarmKind::Mopso) {
            const double w = params.pso.inertia_start -
                             (params.pso.inertia_start - params.pso.inertia_end) * static_cast<double>(t) /
                                 static_cast<double>(t_max);
            for (std::size_t i = 0; i < n_pop; ++i) {
                Rng rng(derive_seed(seed, {kUpdateStream, t, i}));
                const Solution& leader = archive.empty() ? personal_best[i] : archive.select_leader(rng).solution;
                const auto x = continuous_vector(pop[i]);
                const auto pb = continuous_vector(personal_best[i]);
                const auto gb = continuous_vector(leader);
                auto& v = velocity[i];
                std::vector<double> moved(x.size());
                for (std::size_t n = 0; n < x.size(); ++n) {
                    const double span = bounds.upper[n] - bounds.lower[n];
                    v[n] = w * v[n] + params.pso.c_cognitive * rng.uniform() * (pb[n] - x[n]) +
                           params.pso.c_social * rng.uniform() * (gb[n] - x[n]);
                    v[n] = std::clamp(v[n], -span, span);
                    moved[n] = x[n] + v[n];
                }
                Solution y = pop[i];
                assign_continuous(y, clamp_to(std::move(moved), bounds));
                update_discrete(y, leader, c1, s, rng);
                repair_constraints(y, s, params, bounds, rng);
                next.push_back(std::move(y));
            }
        } else {
            // Salp chain: rank the population, the first one leads.
            std::vector<std::size_t> order(n_pop);
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return ranks_before(objs[a], objs[b]); });
            const double c2 = iter_rng.uniform();
            const double c3 = iter_rng.uniform();
            for (std::size_t r = 0; r < n_pop; ++r) {
                Rng rng(derive_seed(seed, {kUpdateStream, t, r}));
                const Solution& x = pop[order[r]];
                const Solution& best = archive.empty() ? pop[order[0]] : archive.select_leader(rng).solution;
                const SalpRole role = r == 0 ? SalpRole::Leader : SalpRole::Follower;
                const Solution* prev = r == 0 ? nullptr : &next[r - 1];
                ChaosStreams* streams = kind == SwarmKind::Emssa ? &chaos : nullptr;
                Solution y = update_solution(x, best, prev, role, c1, streams, c2, c3, bounds, s, rng);
                repair_constraints(y, s, params, bounds, rng);
                next.push_back(std::move(y));
            }
        }

        pop = std::move(next);
        objs = evaluate_all(ev, pop, params.eval_threads);
        result.evaluations += n_pop;
        for (std::size_t i = 0; i < n_pop; ++i) archive.insert(pop[i], objs[i], t * n_pop + i);

        if (kind == SwarmKind::Mopso) {
            for (std::size_t i = 0; i < n_pop; ++i) {
                Rng rng(derive_seed(seed, {kUpdateStream, t, i, 1}));
                const bool better = dominates(objs[i], personal_obj[i]);
                const bool tie = !dominates(personal_obj[i], objs[i]) && rng.uniform() < 0.5;
                if (better || tie) {
                    personal_best[i] = pop[i];
                    personal_obj[i] = objs[i];
                }
            }
        }
        result.history.push_back(snapshot(t, archive));
    }

    result.archive = archive.entries();
    result.wall_clock_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

}  // namespace vaamoo::detail
