#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gtsp {

using Weight = std::int64_t;

inline constexpr Weight kInfiniteWeight = std::numeric_limits<Weight>::max() / 4;

// A GTSP instance: complete weighted graph plus a partition of the
// vertices into clusters. Immutable after construction; safe to share
// across concurrent solver runs. Vertex and cluster ids are 0-based.
class GtspInstance {
public:
    GtspInstance(std::string name, int n, std::vector<Weight> weights,
                 std::vector<std::vector<int>> clusters)
        : name_(std::move(name)),
          n_(n),
          m_(static_cast<int>(clusters.size())),
          weight_(std::move(weights)),
          clusters_(std::move(clusters)) {
        if (n_ < 1 || weight_.size() != static_cast<std::size_t>(n_) * n_)
            throw std::invalid_argument("weight matrix size does not match vertex count");
        if (m_ < 3) throw std::invalid_argument("instance needs at least 3 clusters");
        if (n_ < m_) throw std::invalid_argument("fewer vertices than clusters");
        cluster_of_.assign(n_, -1);
        for (int c = 0; c < m_; ++c) {
            if (clusters_[c].empty())
                throw std::invalid_argument("cluster " + std::to_string(c) + " is empty");
            for (int v : clusters_[c]) {
                if (v < 0 || v >= n_)
                    throw std::invalid_argument("vertex id out of range in cluster list");
                if (cluster_of_[v] != -1)
                    throw std::invalid_argument("vertex " + std::to_string(v) +
                                                " appears in more than one cluster");
                cluster_of_[v] = c;
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (cluster_of_[v] == -1)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " belongs to no cluster");
        }
        symmetric_ = true;
        for (int u = 0; u < n_ && symmetric_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (weight(u, v) != weight(v, u)) {
                    symmetric_ = false;
                    break;
                }
        build_min_cluster_edges();
    }

    const std::string& name() const { return name_; }
    int n() const { return n_; }
    int m() const { return m_; }
    bool symmetric() const { return symmetric_; }

    Weight weight(int u, int v) const { return weight_[static_cast<std::size_t>(u) * n_ + v]; }

    int cluster_of(int v) const { return cluster_of_[v]; }
    const std::vector<int>& cluster(int c) const { return clusters_[c]; }
    const std::vector<std::vector<int>>& clusters() const { return clusters_; }

    // Minimum edge weight from cluster i to cluster j; directional for
    // asymmetric instances.
    Weight min_cluster_edge(int i, int j) const {
        if (i == j) throw std::domain_error("min_cluster_edge requires distinct clusters");
        return min_cluster_edge_[static_cast<std::size_t>(i) * m_ + j];
    }

private:
    // O(n^2) pass at load time; queried heavily by the lower-bound gate
    // and cluster optimization.
    void build_min_cluster_edges() {
        min_cluster_edge_.assign(static_cast<std::size_t>(m_) * m_, kInfiniteWeight);
        for (int u = 0; u < n_; ++u) {
            const int cu = cluster_of_[u];
            for (int v = 0; v < n_; ++v) {
                const int cv = cluster_of_[v];
                if (cu == cv) continue;
                Weight& slot = min_cluster_edge_[static_cast<std::size_t>(cu) * m_ + cv];
                slot = std::min(slot, weight(u, v));
            }
        }
    }

    std::string name_;
    int n_;
    int m_;
    std::vector<Weight> weight_;
    std::vector<std::vector<int>> clusters_;
    std::vector<int> cluster_of_;
    std::vector<Weight> min_cluster_edge_;
    bool symmetric_ = true;
};

// A feasible tour in natural coding: one vertex per cluster, in visiting
// order, with the tour weight cached alongside.
struct Chromosome {
    std::vector<int> genes;
    Weight length = 0;

    friend bool operator==(const Chromosome& a, const Chromosome& b) {
        return a.genes == b.genes;
    }
};

// Throws if the gene sequence does not visit every cluster exactly once.
inline void check_feasible(const GtspInstance& inst, std::span<const int> genes) {
    if (genes.size() != static_cast<std::size_t>(inst.m()))
        throw std::invalid_argument("chromosome has " + std::to_string(genes.size()) +
                                    " genes, expected " + std::to_string(inst.m()));
    std::vector<char> seen(inst.m(), 0);
    for (int v : genes) {
        const int c = inst.cluster_of(v);
        if (seen[c])
            throw std::invalid_argument("cluster " + std::to_string(c) +
                                        " visited more than once");
        seen[c] = 1;
    }
    for (int c = 0; c < inst.m(); ++c)
        if (!seen[c])
            throw std::invalid_argument("cluster " + std::to_string(c) + " not visited");
}

inline Weight tour_length_unchecked(const GtspInstance& inst, std::span<const int> genes) {
    Weight total = 0;
    const std::size_t m = genes.size();
    for (std::size_t i = 0; i < m; ++i) total += inst.weight(genes[i], genes[(i + 1) % m]);
    return total;
}

// Cyclic tour weight; for asymmetric instances the traversal direction of
// the sequence is the cost direction.
inline Weight tour_length(const GtspInstance& inst, std::span<const int> genes) {
    check_feasible(inst, genes);
    return tour_length_unchecked(inst, genes);
}

inline Chromosome make_chromosome(const GtspInstance& inst, std::vector<int> genes) {
    Chromosome c{std::move(genes), 0};
    c.length = tour_length(inst, c.genes);
    return c;
}

// Rotates the chromosome so the vertex of cluster 0 occupies position 0.
// Never reflects: reversed tours stay distinct even on symmetric instances.
inline Chromosome canonical_form(const GtspInstance& inst, const Chromosome& c) {
    check_feasible(inst, c.genes);
    std::size_t pivot = 0;
    while (inst.cluster_of(c.genes[pivot]) != 0) ++pivot;
    if (pivot == 0) return c;
    Chromosome out;
    out.length = c.length;
    out.genes.reserve(c.genes.size());
    out.genes.insert(out.genes.end(), c.genes.begin() + pivot, c.genes.end());
    out.genes.insert(out.genes.end(), c.genes.begin(), c.genes.begin() + pivot);
    return out;
}

}  // namespace gtsp
