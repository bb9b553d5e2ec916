#pragma once

#include <vector>

#include "gtsp/local_search/heuristics.hpp"
#include "gtsp/local_search/window_dp.hpp"

namespace gtsp {

enum class Heuristic {
    Swaps,
    Inserts,
    Direct2opt,
    TwoOpt,
    NeighborSwap2,
    NeighborSwap3,
    NeighborSwap4,
};

// Pass order of the improvement pipeline for each symmetry class.
inline std::vector<Heuristic> heuristic_vector(bool symmetric) {
    if (symmetric)
        return {Heuristic::Inserts, Heuristic::Direct2opt, Heuristic::TwoOpt,
                Heuristic::NeighborSwap2, Heuristic::NeighborSwap3, Heuristic::NeighborSwap4};
    return {Heuristic::Swaps,         Heuristic::Inserts,       Heuristic::Direct2opt,
            Heuristic::TwoOpt,        Heuristic::NeighborSwap2, Heuristic::NeighborSwap3,
            Heuristic::NeighborSwap4};
}

inline bool run_heuristic(Heuristic h, const GtspInstance& inst, Chromosome& c) {
    const int direct_count = (inst.m() + 3) / 4;
    switch (h) {
        case Heuristic::Swaps: return ls_swaps(inst, c);
        case Heuristic::Inserts: return ls_inserts(inst, c);
        case Heuristic::Direct2opt: return ls_direct_2opt(inst, c, direct_count);
        case Heuristic::TwoOpt: return ls_2opt(inst, c);
        case Heuristic::NeighborSwap2: return ls_k_neighbor_swap(inst, c, 2);
        case Heuristic::NeighborSwap3: return ls_k_neighbor_swap(inst, c, 3);
        case Heuristic::NeighborSwap4: return ls_k_neighbor_swap(inst, c, 4);
    }
    return false;
}

// Applies the heuristic vector cyclically. A heuristic whose pass changes
// nothing is excluded for the rest of the round; a failed 2-opt also
// excludes Direct 2-opt. Once every heuristic is excluded, cluster
// optimization runs. Rounds repeat until neither the heuristics nor
// cluster optimization change the tour, so the result is a fixed point of
// every heuristic in the vector.
inline Chromosome improve(const GtspInstance& inst, Chromosome c) {
    const std::vector<Heuristic> order = heuristic_vector(inst.symmetric());
    while (true) {
        std::vector<bool> active(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            int k = 0;
            if (order[i] == Heuristic::NeighborSwap2) k = 2;
            else if (order[i] == Heuristic::NeighborSwap3) k = 3;
            else if (order[i] == Heuristic::NeighborSwap4) k = 4;
            active[i] = (k == 0 || k < inst.m());  // window must fit the tour
        }

        bool round_improved = false;
        int remaining = 0;
        for (bool a : active) remaining += a;
        while (remaining > 0) {
            for (std::size_t i = 0; i < order.size() && remaining > 0; ++i) {
                if (!active[i]) continue;
                if (run_heuristic(order[i], inst, c)) {
                    round_improved = true;
                } else {
                    active[i] = false;
                    --remaining;
                    if (order[i] == Heuristic::TwoOpt) {
                        for (std::size_t d = 0; d < order.size(); ++d) {
                            if (order[d] == Heuristic::Direct2opt && active[d]) {
                                active[d] = false;
                                --remaining;
                            }
                        }
                    }
                }
            }
        }

        Chromosome optimized = cluster_optimization(inst, c);
        const bool co_improved = optimized.length < c.length;
        if (co_improved) c = std::move(optimized);
        if (!round_improved && !co_improved) return c;
    }
}

}  // namespace gtsp
