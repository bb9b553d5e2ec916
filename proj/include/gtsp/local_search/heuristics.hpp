#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gtsp/core/instance.hpp"
#include "gtsp/local_search/window_dp.hpp"

namespace gtsp {

// Optimistic new-length bound used before running the in-window vertex
// optimization of k-Neighbor Swap and Inserts: edges adjacent to the
// vertices still to be optimized are assumed to take the shortest edge
// between their cluster pair. Returns true when the move can be declined
// without exact evaluation.
inline bool lower_bound_declines(const GtspInstance& inst, Weight fixed_part,
                                 std::span<const std::pair<int, int>> unknown_cluster_edges,
                                 Weight l_prev) {
    Weight bound = fixed_part;
    for (const auto& [a, b] : unknown_cluster_edges) bound += inst.min_cluster_edge(a, b);
    return bound >= l_prev;
}

namespace detail {

inline int cyclic_distance(int a, int b, int m) {
    int d = a - b;
    if (d < 0) d = -d;
    return std::min(d, m - d);
}

// Permutations of {0..k-1} with no proper prefix {0..t-1} mapping onto
// itself. These are exactly the window rearrangements not expressible via
// smaller windows: 1 for k=2, 3 for k=3, 13 for k=4.
inline const std::vector<std::vector<int>>& indecomposable_permutations(int k) {
    static std::vector<std::vector<std::vector<int>>> cache;
    if (static_cast<int>(cache.size()) <= k) cache.resize(k + 1);
    auto& perms = cache[k];
    if (perms.empty()) {
        std::vector<int> p(k);
        std::iota(p.begin(), p.end(), 0);
        do {
            bool decomposable = false;
            int prefix_max = -1;
            for (int t = 0; t < k - 1 && !decomposable; ++t) {
                prefix_max = std::max(prefix_max, p[t]);
                if (prefix_max == t) decomposable = true;
            }
            if (!decomposable) perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return perms;
}

inline void assert_length_cache(const GtspInstance& inst, const Chromosome& c) {
#ifndef NDEBUG
    assert(c.length == tour_length_unchecked(inst, c.genes));
#else
    (void)inst;
    (void)c;
#endif
}

// One scan over all non-neighboring position pairs, swapping the two
// vertices in place when that shortens the tour. Returns true if any
// exchange was applied.
inline bool swaps_cycle(const GtspInstance& inst, Chromosome& c) {
    const int m = inst.m();
    auto& g = c.genes;
    bool improved = false;
    for (int i = 0; i < m; ++i) {
        for (int j = i + 2; j < m; ++j) {
            if (cyclic_distance(i, j, m) < 2) continue;
            // affected edge positions, deduplicated (j may equal i+2)
            int edges[4] = {(i + m - 1) % m, i, (j + m - 1) % m, j};
            Weight before = 0;
            for (int t = 0; t < 4; ++t) {
                if (t > 0 && edges[t] == edges[t - 1]) continue;
                before += inst.weight(g[edges[t]], g[(edges[t] + 1) % m]);
            }
            std::swap(g[i], g[j]);
            Weight after = 0;
            for (int t = 0; t < 4; ++t) {
                if (t > 0 && edges[t] == edges[t - 1]) continue;
                after += inst.weight(g[edges[t]], g[(edges[t] + 1) % m]);
            }
            if (after < before) {
                c.length += after - before;
                improved = true;
            } else {
                std::swap(g[i], g[j]);
            }
        }
    }
    return improved;
}

// Exact length change of replacing edges (i,i+1),(j,j+1) by (i,j),(i+1,j+1)
// and reversing the segment [i+1..j]; for asymmetric instances this
// includes the cost change of every reversed internal edge.
inline Weight two_opt_delta(const GtspInstance& inst, const std::vector<int>& g, int i, int j) {
    const int m = static_cast<int>(g.size());
    const int i1 = (i + 1) % m, j1 = (j + 1) % m;
    Weight delta = inst.weight(g[i], g[j]) + inst.weight(g[i1], g[j1]) -
                   inst.weight(g[i], g[i1]) - inst.weight(g[j], g[j1]);
    if (!inst.symmetric()) {
        for (int t = i + 1; t < j; ++t)
            delta += inst.weight(g[t + 1], g[t]) - inst.weight(g[t], g[t + 1]);
    }
    return delta;
}

inline void apply_two_opt(Chromosome& c, int i, int j, Weight delta) {
    std::reverse(c.genes.begin() + i + 1, c.genes.begin() + j + 1);
    c.length += delta;
}

inline bool two_opt_cycle(const GtspInstance& inst, Chromosome& c) {
    const int m = inst.m();
    bool improved = false;
    for (int i = 0; i < m - 2; ++i) {
        const int j_end = (i == 0) ? m - 1 : m;
        for (int j = i + 2; j < j_end; ++j) {
            const Weight delta = two_opt_delta(inst, c.genes, i, j);
            if (delta < 0) {
                apply_two_opt(c, i, j, delta);
                improved = true;
            }
        }
    }
    return improved;
}

inline bool direct_two_opt_cycle(const GtspInstance& inst, Chromosome& c, int count) {
    const int m = inst.m();
    count = std::min(count, m);
    // heaviest tour edges, ties by position order
    std::vector<int> pos(m);
    std::iota(pos.begin(), pos.end(), 0);
    const auto& g = c.genes;
    std::stable_sort(pos.begin(), pos.end(), [&](int a, int b) {
        return inst.weight(g[a], g[(a + 1) % m]) > inst.weight(g[b], g[(b + 1) % m]);
    });
    pos.resize(count);
    std::sort(pos.begin(), pos.end());

    bool improved = false;
    for (std::size_t a = 0; a < pos.size(); ++a) {
        for (std::size_t b = a + 1; b < pos.size(); ++b) {
            const int i = pos[a], j = pos[b];
            if (j == i + 1 || (i == 0 && j == m - 1)) continue;  // adjacent edges
            const Weight delta = two_opt_delta(inst, c.genes, i, j);
            if (delta < 0) {
                apply_two_opt(c, i, j, delta);
                improved = true;
            }
        }
    }
    return improved;
}

inline bool inserts_cycle(const GtspInstance& inst, Chromosome& c) {
    const int m = inst.m();
    bool improved = false;
    for (int i = 0; i < m; ++i) {
        for (int p = 0; p < m; ++p) {
            if (cyclic_distance(i, p, m) < 2) continue;
            auto& g = c.genes;
            const int x_cluster = inst.cluster_of(g[i]);
            const int prev = g[(i + m - 1) % m], next = g[(i + 1) % m];
            // tour with position i removed, as an index mapping
            auto rem = [&](int t) { return g[t < i ? t : t + 1]; };  // t in [0, m-1)
            const Weight joined = c.length - inst.weight(prev, g[i]) - inst.weight(g[i], next) +
                                  inst.weight(prev, next);
            const int u = rem((p + m - 2) % (m - 1));
            const int v = rem(p % (m - 1));
            const Weight opened = joined - inst.weight(u, v);

            const std::pair<int, int> unknown[2] = {{inst.cluster_of(u), x_cluster},
                                                    {x_cluster, inst.cluster_of(v)}};
            if (lower_bound_declines(inst, opened, unknown, c.length)) continue;

            // best vertex of the inserted cluster between its new neighbors
            Weight best = kInfiniteWeight;
            int best_x = -1;
            for (int x : inst.cluster(x_cluster)) {
                const Weight w = inst.weight(u, x) + inst.weight(x, v);
                if (w < best) {
                    best = w;
                    best_x = x;
                }
            }
            if (opened + best < c.length) {
                std::vector<int> out;
                out.reserve(m);
                for (int t = 0; t < m - 1; ++t) {
                    if (t == p) out.push_back(best_x);
                    out.push_back(rem(t));
                }
                if (p == m - 1) out.push_back(best_x);
                c.length = opened + best;
                g = std::move(out);
                improved = true;
            }
        }
    }
    return improved;
}

inline bool k_neighbor_swap_cycle(const GtspInstance& inst, Chromosome& c, int k) {
    const int m = inst.m();
    const auto& perms = indecomposable_permutations(k);
    bool improved = false;
    std::vector<int> window_clusters(k), permuted(k);

    for (int p = 0; p < m; ++p) {
        auto& g = c.genes;
        const int pred = g[(p + m - 1) % m];
        const int succ = g[(p + k) % m];
        for (int t = 0; t < k; ++t) window_clusters[t] = inst.cluster_of(g[(p + t) % m]);

        // weight of the chain pred -> window -> succ in the current tour
        Weight chain = inst.weight(pred, g[p]);
        for (int t = 0; t + 1 < k; ++t) chain += inst.weight(g[(p + t) % m], g[(p + t + 1) % m]);
        chain += inst.weight(g[(p + k - 1) % m], succ);
        const Weight fixed_part = c.length - chain;

        Weight best_len = c.length;
        WindowSelection best_sel;
        for (const auto& perm : perms) {
            for (int t = 0; t < k; ++t) permuted[t] = window_clusters[perm[t]];

            std::vector<std::pair<int, int>> unknown;
            unknown.reserve(k + 1);
            unknown.emplace_back(inst.cluster_of(pred), permuted[0]);
            for (int t = 0; t + 1 < k; ++t) unknown.emplace_back(permuted[t], permuted[t + 1]);
            unknown.emplace_back(permuted[k - 1], inst.cluster_of(succ));
            if (lower_bound_declines(inst, fixed_part, unknown, best_len)) continue;

            WindowSelection sel = best_vertices_for_window(inst, pred, permuted, succ);
            if (fixed_part + sel.path_weight < best_len) {
                best_len = fixed_part + sel.path_weight;
                best_sel = std::move(sel);
            }
        }
        if (best_len < c.length) {
            for (int t = 0; t < k; ++t) g[(p + t) % m] = best_sel.vertices[t];
            c.length = best_len;
            improved = true;
        }
    }
    return improved;
}

}  // namespace detail

// Each heuristic repeats full scans (applying every improvement found
// during a scan immediately) until a scan applies nothing, so its output
// admits no improving move of its own kind. Returns true if the tour
// changed. All heuristics keep the cached length consistent.

inline bool ls_swaps(const GtspInstance& inst, Chromosome& c) {
    bool improved = false;
    while (detail::swaps_cycle(inst, c)) improved = true;
    detail::assert_length_cache(inst, c);
    return improved;
}

inline bool ls_2opt(const GtspInstance& inst, Chromosome& c) {
    bool improved = false;
    while (detail::two_opt_cycle(inst, c)) improved = true;
    detail::assert_length_cache(inst, c);
    return improved;
}

// 2-opt restricted to pairs among the `count` heaviest tour edges
// (count = ceil(M/4) in the solver); edges are re-ranked once per scan.
inline bool ls_direct_2opt(const GtspInstance& inst, Chromosome& c, int count) {
    bool improved = false;
    while (detail::direct_two_opt_cycle(inst, c, count)) improved = true;
    detail::assert_length_cache(inst, c);
    return improved;
}

inline bool ls_inserts(const GtspInstance& inst, Chromosome& c) {
    bool improved = false;
    while (detail::inserts_cycle(inst, c)) improved = true;
    detail::assert_length_cache(inst, c);
    return improved;
}

inline bool ls_k_neighbor_swap(const GtspInstance& inst, Chromosome& c, int k) {
    if (k >= inst.m()) throw std::domain_error("window size must be below cluster count");
    bool improved = false;
    while (detail::k_neighbor_swap_cycle(inst, c, k)) improved = true;
    detail::assert_length_cache(inst, c);
    return improved;
}

}  // namespace gtsp
