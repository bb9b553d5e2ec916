#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace gtsp {

// Seedable generator used for every stochastic choice in the solver.
// Bounded draws use rejection sampling on mt19937_64 output so a given
// seed replays identically regardless of the standard library's
// uniform_int_distribution implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform integer in [0, n), n > 0
    int below(int n) {
        const std::uint64_t bound = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return static_cast<int>(x % bound);
    }

    // uniform integer in [lo, hi] inclusive
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }

    // Fisher-Yates
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            std::swap(v[i], v[below(i + 1)]);
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace gtsp
