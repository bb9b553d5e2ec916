#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gtsp/core/instance.hpp"
#include "gtsp/core/rng.hpp"
#include "gtsp/ga/operators.hpp"
#include "gtsp/ga/params.hpp"
#include "gtsp/local_search/improve.hpp"

namespace gtsp {

// One generation: canonical-form chromosomes, deduplicated, sorted by
// length (ties broken lexicographically so the order is reproducible).
struct Population {
    std::vector<Chromosome> members;
    int generation_index = 0;

    const Chromosome& best() const { return members.front(); }
};

namespace detail {

inline void canonicalize_dedup_sort(const GtspInstance& inst, std::vector<Chromosome>& members) {
    for (auto& c : members) c = canonical_form(inst, c);
    std::sort(members.begin(), members.end(), [](const Chromosome& a, const Chromosome& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.genes < b.genes;
    });
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

}  // namespace detail

enum class SelectionKind { Reproduction, Crossover, Mutation };

// Reproduction: the r shortest members (all if fewer). Crossover: two
// independent uniform draws from the best ceil(0.33 |pop|) members (the
// two may coincide). Mutation: one uniform draw from the best
// ceil(0.75 |pop|).
inline std::vector<const Chromosome*> select_parents(const Population& pop, SelectionKind kind,
                                                     int r, const GaParams& params, Rng& rng) {
    const int size = static_cast<int>(pop.members.size());
    if (size == 0) throw std::logic_error("selection from an empty population");
    switch (kind) {
        case SelectionKind::Reproduction: {
            std::vector<const Chromosome*> out;
            for (int i = 0; i < std::min(r, size); ++i) out.push_back(&pop.members[i]);
            return out;
        }
        case SelectionKind::Crossover: {
            const int pool = static_cast<int>(std::ceil(params.crossover_elite_fraction * size));
            return {&pop.members[rng.below(pool)], &pop.members[rng.below(pool)]};
        }
        case SelectionKind::Mutation: {
            const int pool = static_cast<int>(std::ceil(params.mutation_elite_fraction * size));
            return {&pop.members[rng.below(pool)]};
        }
    }
    return {};
}

inline Population init_population(const GtspInstance& inst, const GaParams& params, Rng& rng) {
    const int attempts = static_cast<int>(
        std::llround(params.first_gen_multiplier(inst.symmetric()) * inst.m()));
    std::vector<Chromosome> members;
    members.reserve(attempts);
    for (int i = 0; i < attempts; ++i)
        members.push_back(improve(inst, semirandom_construct(inst, rng)));
    detail::canonicalize_dedup_sort(inst, members);
    return Population{std::move(members), 1};
}

inline Population next_generation(const Population& pop, const GtspInstance& inst,
                                  const GaParams& params, Rng& rng) {
    const GenerationBudget budget = generation_budget(pop.generation_index, inst.m(), params);
    std::vector<Chromosome> members;
    members.reserve(budget.reproductions + budget.crossovers + budget.mutations);

    // reproduced elites are copied verbatim, not re-improved
    for (const Chromosome* c :
         select_parents(pop, SelectionKind::Reproduction, budget.reproductions, params, rng))
        members.push_back(*c);

    for (int i = 0; i < budget.crossovers; ++i) {
        auto parents = select_parents(pop, SelectionKind::Crossover, 0, params, rng);
        members.push_back(improve(inst, crossover(inst, *parents[0], *parents[1], rng)));
    }
    for (int i = 0; i < budget.mutations; ++i) {
        auto parents = select_parents(pop, SelectionKind::Mutation, 0, params, rng);
        members.push_back(improve(inst, mutate(inst, *parents[0], params, rng)));
    }

    detail::canonicalize_dedup_sort(inst, members);
    return Population{std::move(members), pop.generation_index + 1};
}

// Idle-streak bookkeeping for termination: I_cur counts consecutive idle
// generations at the current best length; I_max is the longest streak
// finished at any earlier (worse) best length.
struct EvolutionState {
    int generations = 0;  // produced after the first one
    Weight best_length = kInfiniteWeight;
    int idle_current = 0;
    int idle_max = 0;

    void observe(Weight generation_best) {
        if (generation_best < best_length) {
            idle_max = std::max(idle_max, idle_current);
            idle_current = 0;
            best_length = generation_best;
        } else {
            ++idle_current;
        }
    }
};

inline bool should_terminate(const EvolutionState& state, int m, bool symmetric,
                             const GaParams& params = {}) {
    const double threshold = std::max(params.idle_growth * state.idle_max,
                                      params.idle_cluster_coeff * m + params.idle_const(symmetric));
    return state.idle_current >= threshold;
}

struct RunReport {
    Chromosome best;
    int generations = 0;  // generations produced after the initial one
    double seconds = 0.0;
    std::vector<Weight> best_trace;  // best length after each generation
};

// Full evolution run; deterministic for a fixed seed.
inline RunReport solve(const GtspInstance& inst, const GaParams& params = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    Rng rng(params.rng_seed);

    Population pop = init_population(inst, params, rng);
    EvolutionState state;
    state.best_length = pop.best().length;

    RunReport report;
    report.best_trace.push_back(pop.best().length);
    while (!should_terminate(state, inst.m(), inst.symmetric(), params)) {
        pop = next_generation(pop, inst, params, rng);
        ++state.generations;
        state.observe(pop.best().length);
        report.best_trace.push_back(pop.best().length);
    }

    report.best = pop.best();
    report.generations = state.generations;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace gtsp
