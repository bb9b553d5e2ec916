#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "gtsp/core/instance.hpp"
#include "gtsp/core/rng.hpp"
#include "gtsp/ga/params.hpp"
#include "gtsp/local_search/window_dp.hpp"

namespace gtsp {

// Random cluster permutation followed by the optimal vertex choice for
// that order.
inline Chromosome semirandom_construct(const GtspInstance& inst, Rng& rng) {
    std::vector<int> order(inst.m());
    for (int c = 0; c < inst.m(); ++c) order[c] = c;
    rng.shuffle(order);
    Chromosome c;
    c.genes.reserve(inst.m());
    for (int cl : order) c.genes.push_back(inst.cluster(cl).front());
    c.length = tour_length_unchecked(inst, c.genes);
    return cluster_optimization(inst, c);
}

// Two-point order-preserving crossover with a fixed fragment choice.
// Both parents must already be in canonical form. The child starts with
// p's fragment [a, a+l); the rest follows q cyclically from position a+l,
// skipping clusters the child already visits.
inline Chromosome crossover_at(const GtspInstance& inst, const Chromosome& p, const Chromosome& q,
                               int a, int l) {
    const int m = inst.m();
    std::vector<char> visited(m, 0);
    Chromosome child;
    child.genes.reserve(m);
    for (int i = 0; i < l; ++i) {
        const int v = p.genes[(a + i) % m];
        visited[inst.cluster_of(v)] = 1;
        child.genes.push_back(v);
    }
    for (int i = 0; i < m; ++i) {
        const int v = q.genes[(a + l + i) % m];
        if (visited[inst.cluster_of(v)]) continue;
        visited[inst.cluster_of(v)] = 1;
        child.genes.push_back(v);
    }
    child.length = tour_length_unchecked(inst, child.genes);
    return child;
}

// Draws the fragment position a in [0, M) and length l in [1, M-1],
// in that order.
inline Chromosome crossover(const GtspInstance& inst, const Chromosome& p, const Chromosome& q,
                            Rng& rng) {
    const int a = rng.below(inst.m());
    const int l = rng.between(1, inst.m() - 1);
    return crossover_at(inst, p, q, a, l);
}

// Removes the fragment [start, start+len) and reinserts it so that it
// begins at index `insert_pos` of the resulting chromosome.
inline Chromosome mutate_at(const GtspInstance& inst, const Chromosome& p, int start, int len,
                            int insert_pos) {
    const int m = inst.m();
    std::vector<char> in_fragment(m, 0);
    for (int i = 0; i < len; ++i) in_fragment[(start + i) % m] = 1;
    std::vector<int> fragment, rest;
    fragment.reserve(len);
    rest.reserve(m - len);
    for (int i = 0; i < len; ++i) fragment.push_back(p.genes[(start + i) % m]);
    for (int i = 0; i < m; ++i)
        if (!in_fragment[i]) rest.push_back(p.genes[i]);

    Chromosome out;
    out.genes.reserve(m);
    out.genes.insert(out.genes.end(), rest.begin(), rest.begin() + insert_pos);
    out.genes.insert(out.genes.end(), fragment.begin(), fragment.end());
    out.genes.insert(out.genes.end(), rest.begin() + insert_pos, rest.end());
    out.length = tour_length_unchecked(inst, out.genes);
    return out;
}

// Fragment length uniform in [max(1, round(0.05 M)), max(1, round(0.3 M))];
// draws length, then start in [0, M), then insert position in [0, M-len].
inline Chromosome mutate(const GtspInstance& inst, const Chromosome& p, const GaParams& params,
                         Rng& rng) {
    const int m = inst.m();
    const int lo = std::max(1, static_cast<int>(std::llround(params.mutation_fragment_min * m)));
    const int hi = std::max(lo, std::min(m - 1, static_cast<int>(std::llround(
                                                    params.mutation_fragment_max * m))));
    const int len = rng.between(lo, hi);
    const int start = rng.below(m);
    const int insert_pos = rng.between(0, m - len);
    return mutate_at(inst, p, start, len, insert_pos);
}

}  // namespace gtsp
