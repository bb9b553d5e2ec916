#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "gtsp/local_search/heuristics.hpp"
#include "gtsp/local_search/improve.hpp"
#include "test_support.hpp"

using namespace gtsp;

namespace {

// Exhaustive move scans used as local-optimality oracles. Each returns
// true if some improving move of the heuristic's kind exists.

bool improving_swap_exists(const GtspInstance& inst, const Chromosome& c) {
    const int m = inst.m();
    for (int i = 0; i < m; ++i)
        for (int j = i + 2; j < m; ++j) {
            if (detail::cyclic_distance(i, j, m) < 2) continue;
            auto genes = c.genes;
            std::swap(genes[i], genes[j]);
            if (tour_length_unchecked(inst, genes) < c.length) return true;
        }
    return false;
}

bool improving_two_opt_exists(const GtspInstance& inst, const Chromosome& c) {
    const int m = inst.m();
    for (int i = 0; i + 2 < m; ++i)
        for (int j = i + 2; j < ((i == 0) ? m - 1 : m); ++j) {
            auto genes = c.genes;
            std::reverse(genes.begin() + i + 1, genes.begin() + j + 1);
            if (tour_length_unchecked(inst, genes) < c.length) return true;
        }
    return false;
}

bool improving_insert_exists(const GtspInstance& inst, const Chromosome& c) {
    const int m = inst.m();
    for (int i = 0; i < m; ++i)
        for (int p = 0; p < m; ++p) {
            if (detail::cyclic_distance(i, p, m) < 2) continue;
            std::vector<int> rest;
            for (int t = 0; t < m; ++t)
                if (t != i) rest.push_back(c.genes[t]);
            for (int x : inst.cluster(inst.cluster_of(c.genes[i]))) {
                auto genes = rest;
                genes.insert(genes.begin() + p, x);
                if (tour_length_unchecked(inst, genes) < c.length) return true;
            }
        }
    return false;
}

bool improving_k_swap_exists(const GtspInstance& inst, const Chromosome& c, int k) {
    const int m = inst.m();
    for (int p = 0; p < m; ++p) {
        for (const auto& perm : detail::indecomposable_permutations(k)) {
            std::vector<int> window_clusters(k);
            for (int t = 0; t < k; ++t)
                window_clusters[t] = inst.cluster_of(c.genes[(p + perm[t]) % m]);
            const auto sel = best_vertices_for_window(
                inst, c.genes[(p + m - 1) % m], window_clusters, c.genes[(p + k) % m]);
            auto genes = c.genes;
            for (int t = 0; t < k; ++t) genes[(p + t) % m] = sel.vertices[t];
            if (tour_length_unchecked(inst, genes) < c.length) return true;
        }
    }
    return false;
}

// Independent adjacent-swap local search on singleton-cluster instances,
// for the k=2 equivalence check.
Weight adjacent_swap_descent(const GtspInstance& inst, Chromosome c) {
    const int m = inst.m();
    bool improved = true;
    while (improved) {
        improved = false;
        for (int p = 0; p < m; ++p) {
            auto genes = c.genes;
            std::swap(genes[p], genes[(p + 1) % m]);
            const Weight len = tour_length_unchecked(inst, genes);
            if (len < c.length) {
                c.genes = genes;
                c.length = len;
                improved = true;
            }
        }
    }
    return c.length;
}

}  // namespace

TEST_CASE("window permutation sets: 1 for k=2, 3 for k=3, 13 for k=4") {
    CHECK(detail::indecomposable_permutations(2).size() == 1);
    CHECK(detail::indecomposable_permutations(2)[0] == std::vector<int>{1, 0});

    const auto& p3 = detail::indecomposable_permutations(3);
    REQUIRE(p3.size() == 3);
    // (13), (123), (132) in cycle notation
    const std::vector<std::vector<int>> expected = {{1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (const auto& perm : expected)
        CHECK(std::find(p3.begin(), p3.end(), perm) != p3.end());

    const auto& p4 = detail::indecomposable_permutations(4);
    CHECK(p4.size() == 13);
    // every one displaces both endpoints
    for (const auto& perm : p4) {
        CHECK(perm[0] != 0);
        CHECK(perm[3] != 3);
    }
    // the double adjacent transposition is covered by two 2-windows
    CHECK(std::find(p4.begin(), p4.end(), std::vector<int>{1, 0, 3, 2}) == p4.end());
}

TEST_CASE("swaps: strict improvement on a line tour") {
    // vertices at x = 0,1,2,3,4; tour (0 3 2 1 4) improves by swapping
    // the vertices at the positions of 3 and 1
    const auto inst = test::line_instance({0, 1, 2, 3, 4});
    auto c = make_chromosome(inst, {0, 3, 2, 1, 4});
    const Weight before = c.length;
    CHECK(ls_swaps(inst, c));
    CHECK(c.length < before);
    CHECK(c.length == tour_length(inst, c.genes));
}

TEST_CASE("swaps: fixed point stays unchanged") {
    const auto inst = test::line_instance({0, 1, 2, 3, 4});
    auto c = make_chromosome(inst, {0, 1, 2, 3, 4});
    CHECK_FALSE(ls_swaps(inst, c));
    CHECK(c.genes == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("swaps: output admits no improving non-neighboring swap") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const auto inst = test::random_instance(rng, 7, 3, trial % 2 == 0);
        auto c = test::random_tour(inst, rng);
        ls_swaps(inst, c);
        CHECK_FALSE(improving_swap_exists(inst, c));
    }
}

TEST_CASE("2-opt uncrosses the square") {
    const auto inst = test::square_instance();
    auto c = make_chromosome(inst, {0, 2, 1, 3});
    REQUIRE(c.length == 48);
    CHECK(ls_2opt(inst, c));
    CHECK(c.length == 40);

    SECTION("fixed point") {
        auto d = c;
        CHECK_FALSE(ls_2opt(inst, d));
        CHECK(d.genes == c.genes);
    }
}

TEST_CASE("2-opt: no improving move remains, symmetric and asymmetric") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const auto inst = test::random_instance(rng, 8, 3, trial % 2 == 0);
        auto c = test::random_tour(inst, rng);
        ls_2opt(inst, c);
        CHECK_FALSE(improving_two_opt_exists(inst, c));
        CHECK(c.length == tour_length(inst, c.genes));
    }
}

TEST_CASE("2-opt four-edge delta equals full recomputation on symmetric instances") {
    std::mt19937 rng(47);
    int moves = 0;
    while (moves < 10000) {
        const auto inst = test::random_instance(rng, 8, 3, true);
        const auto c = test::random_tour(inst, rng);
        const int m = inst.m();
        for (int i = 0; i + 2 < m && moves < 10000; ++i)
            for (int j = i + 2; j < ((i == 0) ? m - 1 : m) && moves < 10000; ++j) {
                const Weight delta = detail::two_opt_delta(inst, c.genes, i, j);
                auto genes = c.genes;
                std::reverse(genes.begin() + i + 1, genes.begin() + j + 1);
                CHECK(c.length + delta == tour_length_unchecked(inst, genes));
                ++moves;
            }
    }
}

TEST_CASE("asymmetric 2-opt delta includes reversed-segment cost") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        const auto inst = test::random_instance(rng, 7, 2, false);
        const auto c = test::random_tour(inst, rng);
        const int m = inst.m();
        for (int i = 0; i + 2 < m; ++i)
            for (int j = i + 2; j < ((i == 0) ? m - 1 : m); ++j) {
                const Weight delta = detail::two_opt_delta(inst, c.genes, i, j);
                auto genes = c.genes;
                std::reverse(genes.begin() + i + 1, genes.begin() + j + 1);
                REQUIRE(c.length + delta == tour_length_unchecked(inst, genes));
            }
    }
}

TEST_CASE("direct 2-opt with count >= M matches plain 2-opt") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        const auto inst = test::random_instance(rng, 8, 2, true);
        auto a = test::random_tour(inst, rng);
        auto b = a;
        ls_direct_2opt(inst, a, inst.m());
        ls_2opt(inst, b);
        CHECK(a.genes == b.genes);
    }
}

TEST_CASE("direct 2-opt removes a crossing formed by the two heaviest edges") {
    // crossing square tour: the two diagonals (weight 14) are the heaviest
    // edges and form a non-adjacent pair
    const auto inst = test::square_instance();
    auto crossed = make_chromosome(inst, {0, 2, 1, 3});
    auto direct = crossed;
    auto full = crossed;
    CHECK(ls_direct_2opt(inst, direct, 2));
    ls_2opt(inst, full);
    CHECK(direct.length == 40);
    CHECK(direct.length == full.length);
}

TEST_CASE("direct 2-opt on uniform edges does nothing") {
    std::vector<Weight> w(25, 1);
    for (int v = 0; v < 5; ++v) w[static_cast<std::size_t>(v) * 5 + v] = 0;
    const auto inst = test::singleton_instance(std::move(w), 5, "uniform");
    auto c = make_chromosome(inst, {0, 1, 2, 3, 4});
    CHECK_FALSE(ls_direct_2opt(inst, c, 2));
    CHECK(c.genes == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("inserts: M=3 has no valid positions") {
    const auto inst = test::line_instance({0, 1, 7});
    auto c = make_chromosome(inst, {0, 2, 1});
    CHECK_FALSE(ls_inserts(inst, c));
    CHECK(c.genes == std::vector<int>{0, 2, 1});
}

TEST_CASE("inserts: strict improvement by relocating a vertex") {
    // points (0,0),(1,0),(2,0),(2,2),(0,2); tour (0 2 3 4 1) has length 9,
    // moving vertex 1 back between 0 and 2 gives the 8-long perimeter
    const std::vector<std::pair<int, int>> pts = {{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}};
    std::vector<Weight> w(25);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v) {
            const double dx = pts[u].first - pts[v].first;
            const double dy = pts[u].second - pts[v].second;
            w[static_cast<std::size_t>(u) * 5 + v] =
                static_cast<Weight>(std::llround(std::sqrt(dx * dx + dy * dy)));
        }
    const auto inst = test::singleton_instance(std::move(w), 5, "pentagon");
    auto c = make_chromosome(inst, {0, 2, 3, 4, 1});
    REQUIRE(c.length == 9);
    CHECK(ls_inserts(inst, c));
    CHECK(c.length == 8);
}

TEST_CASE("inserts: no improving insertion remains") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        const auto inst = test::random_instance(rng, 7, 3, trial % 2 == 0);
        auto c = test::random_tour(inst, rng);
        ls_inserts(inst, c);
        CHECK_FALSE(improving_insert_exists(inst, c));
        CHECK(c.length == tour_length(inst, c.genes));
    }
}

TEST_CASE("k-neighbor swap rejects oversized windows") {
    const auto inst = test::square_instance();
    auto c = make_chromosome(inst, {0, 1, 2, 3});
    CHECK_THROWS_AS(ls_k_neighbor_swap(inst, c, 4), std::domain_error);
}

TEST_CASE("2-neighbor swap equals adjacent-swap descent on singleton clusters") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        const auto inst = test::random_instance(rng, 7, 1, true);
        auto c = test::random_tour(inst, rng);
        const Weight oracle = adjacent_swap_descent(inst, c);
        ls_k_neighbor_swap(inst, c, 2);
        CHECK(c.length == oracle);
    }
}

TEST_CASE("k-neighbor swap reaches a window-local optimum") {
    std::mt19937 rng(71);
    for (int k : {2, 3, 4}) {
        for (int trial = 0; trial < 15; ++trial) {
            const auto inst = test::random_instance(rng, 7, 3, trial % 2 == 0);
            auto c = test::random_tour(inst, rng);
            ls_k_neighbor_swap(inst, c, k);
            CHECK_FALSE(improving_k_swap_exists(inst, c, k));
            CHECK(c.length == tour_length(inst, c.genes));
        }
    }
}

TEST_CASE("lower bound gate") {
    SECTION("never declines with an infinite previous length") {
        std::mt19937 rng(73);
        const auto inst = test::random_instance(rng, 5, 3, true);
        const std::pair<int, int> unknown[] = {{0, 1}, {1, 2}};
        CHECK_FALSE(lower_bound_declines(inst, 0, unknown, kInfiniteWeight));
    }
    SECTION("exact on singleton clusters") {
        const auto inst = test::square_instance();
        // replacing the chain 0 -> 1 -> 2 costs exactly w(0,1) + w(1,2)
        const std::pair<int, int> unknown[] = {{0, 1}, {1, 2}};
        CHECK(lower_bound_declines(inst, 0, unknown, 20));        // bound 20 >= 20
        CHECK_FALSE(lower_bound_declines(inst, 0, unknown, 21));  // bound 20 < 21
    }
}

TEST_CASE("lower bound gate is sound on random insert moves") {
    std::mt19937 rng(79);
    int checked = 0;
    while (checked < 10000) {
        const auto inst = test::random_instance(rng, 6, 3, checked % 2 == 0);
        const auto c = test::random_tour(inst, rng);
        const int m = inst.m();
        for (int i = 0; i < m && checked < 10000; ++i)
            for (int p = 0; p < m && checked < 10000; ++p) {
                if (detail::cyclic_distance(i, p, m) < 2) continue;
                std::vector<int> rest;
                for (int t = 0; t < m; ++t)
                    if (t != i) rest.push_back(c.genes[t]);
                const int u = rest[(p + m - 2) % (m - 1)];
                const int v = rest[p % (m - 1)];
                const int x_cluster = inst.cluster_of(c.genes[i]);
                const int prev = c.genes[(i + m - 1) % m];
                const int next = c.genes[(i + 1) % m];
                const Weight opened = c.length - inst.weight(prev, c.genes[i]) -
                                      inst.weight(c.genes[i], next) + inst.weight(prev, next) -
                                      inst.weight(u, v);
                const std::pair<int, int> unknown[] = {{inst.cluster_of(u), x_cluster},
                                                       {x_cluster, inst.cluster_of(v)}};
                const bool declined = lower_bound_declines(inst, opened, unknown, c.length);

                // exact evaluation over every vertex of the inserted cluster
                Weight best = kInfiniteWeight;
                for (int x : inst.cluster(x_cluster)) {
                    auto genes = rest;
                    genes.insert(genes.begin() + p, x);
                    best = std::min(best, tour_length_unchecked(inst, genes));
                }
                if (declined) CHECK(best >= c.length);
                ++checked;
            }
    }
}

TEST_CASE("improve: fixed point goes straight to cluster optimization") {
    const auto inst = test::square_instance();
    auto c = make_chromosome(inst, {0, 1, 2, 3});
    const auto out = improve(inst, c);
    CHECK(out.length == c.length);
    CHECK(out.length == cluster_optimization(inst, c).length);
}

TEST_CASE("improve uncrosses the square") {
    const auto inst = test::square_instance();
    const auto out = improve(inst, make_chromosome(inst, {0, 2, 1, 3}));
    CHECK(out.length == 40);
}

TEST_CASE("improve: monotone and a fixed point of the whole pipeline") {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 3 + trial % 6;  // M in [3, 8]
        const auto inst = test::random_instance(rng, m, 3, trial % 2 == 0);
        const auto in = test::random_tour(inst, rng);
        const auto out = improve(inst, in);
        CHECK(out.length <= in.length);
        CHECK(out.length == tour_length(inst, out.genes));

        for (Heuristic h : heuristic_vector(inst.symmetric())) {
            if ((h == Heuristic::NeighborSwap4 && m <= 4) ||
                (h == Heuristic::NeighborSwap3 && m <= 3))
                continue;
            auto again = out;
            run_heuristic(h, inst, again);
            CHECK(again.length == out.length);
        }
        CHECK(cluster_optimization(inst, out).length == out.length);
    }
}
