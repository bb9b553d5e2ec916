#pragma once

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtsp/core/instance.hpp"
#include "gtsp/io/tsplib.hpp"

namespace gtsp {

namespace detail {

// "kroA200" -> "kroa", "d198" -> "d"
inline std::string base_name(const std::string& tsp_name) {
    std::string base = tsp_name;
    while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back()))) base.pop_back();
    for (char& ch : base) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return base;
}

}  // namespace detail

// Derives a GTSP instance from a TSP instance with m = ceil(n/5) clusters.
// Centers: vertex 0 first, then repeatedly the vertex farthest from the
// chosen centers (max-min distance); every other vertex joins its nearest
// center, ties broken by lowest center index. Deterministic.
inline GtspInstance cluster_tsp(const TspInstance& tsp) {
    const int n = tsp.n;
    if (n < 15) throw std::invalid_argument("need at least 15 vertices for 3 clusters");
    const int m = (n + 4) / 5;

    std::vector<int> centers;
    centers.reserve(m);
    centers.push_back(0);
    // min_dist[v] = distance from v to its closest chosen center
    std::vector<Weight> min_dist(n);
    std::vector<int> nearest(n, 0);
    for (int v = 0; v < n; ++v) min_dist[v] = tsp.weight(v, 0);

    while (static_cast<int>(centers.size()) < m) {
        int best = -1;
        Weight best_dist = -1;
        for (int v = 0; v < n; ++v) {
            if (min_dist[v] > best_dist &&
                std::find(centers.begin(), centers.end(), v) == centers.end()) {
                best = v;
                best_dist = min_dist[v];
            }
        }
        const int c = static_cast<int>(centers.size());
        centers.push_back(best);
        for (int v = 0; v < n; ++v) {
            const Weight d = tsp.weight(v, best);
            if (d < min_dist[v]) {
                min_dist[v] = d;
                nearest[v] = c;
            }
        }
    }

    std::vector<std::vector<int>> clusters(m);
    for (int c = 0; c < m; ++c) clusters[c].push_back(centers[c]);
    for (int v = 0; v < n; ++v) {
        if (std::find(centers.begin(), centers.end(), v) != centers.end()) continue;
        clusters[nearest[v]].push_back(v);
    }
    for (auto& members : clusters) std::sort(members.begin(), members.end());

    std::vector<Weight> w(static_cast<std::size_t>(n) * n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) w[static_cast<std::size_t>(u) * n + v] = tsp.weight(u, v);

    const std::string name =
        std::to_string(m) + detail::base_name(tsp.name) + std::to_string(n);
    return GtspInstance(name, n, std::move(w), std::move(clusters));
}

}  // namespace gtsp
