#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "gtsp/core/instance.hpp"

namespace gtsp {

struct WindowSelection {
    std::vector<int> vertices;  // one per cluster of the window, in order
    Weight path_weight = 0;     // weight(pred, v1) + inner edges + weight(vL, succ)
};

// Cheapest vertex choice per cluster for a fixed path
// pred -> cluster_seq[0] -> ... -> cluster_seq[L-1] -> succ,
// by forward dynamic programming over the layered path.
inline WindowSelection best_vertices_for_window(const GtspInstance& inst, int pred,
                                                std::span<const int> cluster_seq, int succ) {
    const std::size_t layers = cluster_seq.size();
    // dist[t][k]: cheapest path from pred to the k-th vertex of layer t
    std::vector<std::vector<Weight>> dist(layers);
    std::vector<std::vector<int>> parent(layers);

    {
        const auto& first = inst.cluster(cluster_seq[0]);
        dist[0].resize(first.size());
        parent[0].assign(first.size(), -1);
        for (std::size_t k = 0; k < first.size(); ++k) dist[0][k] = inst.weight(pred, first[k]);
    }
    for (std::size_t t = 1; t < layers; ++t) {
        const auto& prev = inst.cluster(cluster_seq[t - 1]);
        const auto& cur = inst.cluster(cluster_seq[t]);
        dist[t].assign(cur.size(), kInfiniteWeight);
        parent[t].assign(cur.size(), -1);
        for (std::size_t k = 0; k < cur.size(); ++k) {
            for (std::size_t p = 0; p < prev.size(); ++p) {
                const Weight d = dist[t - 1][p] + inst.weight(prev[p], cur[k]);
                if (d < dist[t][k]) {
                    dist[t][k] = d;
                    parent[t][k] = static_cast<int>(p);
                }
            }
        }
    }

    const auto& last = inst.cluster(cluster_seq[layers - 1]);
    Weight best = kInfiniteWeight;
    int best_k = -1;
    for (std::size_t k = 0; k < last.size(); ++k) {
        const Weight d = dist[layers - 1][k] + inst.weight(last[k], succ);
        if (d < best) {
            best = d;
            best_k = static_cast<int>(k);
        }
    }

    WindowSelection sel;
    sel.path_weight = best;
    sel.vertices.resize(layers);
    int k = best_k;
    for (std::size_t t = layers; t-- > 0;) {
        sel.vertices[t] = inst.cluster(cluster_seq[t])[k];
        k = parent[t][k];
    }
    return sel;
}

// Best vertex per cluster for the fixed cyclic cluster order of c: shortest
// (s, s')-path in the layered digraph built from the tour's clusters plus a
// copy of the first cluster, minimized over all start vertices s. The
// chromosome is first rotated so a minimum-cardinality cluster is the start
// layer, keeping the number of (s, s')-searches small.
inline Chromosome cluster_optimization(const GtspInstance& inst, const Chromosome& c) {
    const int m = inst.m();
    std::size_t start = 0;
    std::size_t best_size = inst.cluster(inst.cluster_of(c.genes[0])).size();
    for (std::size_t i = 1; i < c.genes.size() && best_size > 1; ++i) {
        const std::size_t size = inst.cluster(inst.cluster_of(c.genes[i])).size();
        if (size < best_size) {
            best_size = size;
            start = i;
        }
    }

    std::vector<int> order(m);  // cluster ids in tour order, min cluster first
    for (int i = 0; i < m; ++i)
        order[i] = inst.cluster_of(c.genes[(start + i) % m]);

    const std::span<const int> inner(order.data() + 1, static_cast<std::size_t>(m - 1));
    Weight best = kInfiniteWeight;
    WindowSelection best_sel;
    int best_s = -1;
    for (int s : inst.cluster(order[0])) {
        WindowSelection sel = best_vertices_for_window(inst, s, inner, s);
        if (sel.path_weight < best) {
            best = sel.path_weight;
            best_sel = std::move(sel);
            best_s = s;
        }
    }

    Chromosome out;
    out.genes.reserve(m);
    out.genes.push_back(best_s);
    out.genes.insert(out.genes.end(), best_sel.vertices.begin(), best_sel.vertices.end());
    out.length = best;
    return out;
}

}  // namespace gtsp
