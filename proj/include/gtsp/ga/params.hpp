#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gtsp {

// All numeric constants of the evolution scheme, with their published
// defaults. Every field can be overridden from the CLI.
struct GaParams {
    // first generation: multiplier * M construction attempts
    double first_gen_multiplier_symmetric = 2.0;
    double first_gen_multiplier_asymmetric = 4.0;

    // r = r_gen_coeff * G + r_cluster_coeff * M + r_const
    double r_gen_coeff = 0.2;
    double r_cluster_coeff = 0.05;
    double r_const = 10.0;

    // per-generation operator runs: r reproductions, 8r crossovers, 2r mutations
    int reproduction_multiplier = 1;
    int crossover_multiplier = 8;
    int mutation_multiplier = 2;

    double crossover_elite_fraction = 0.33;
    double mutation_elite_fraction = 0.75;

    // mutation fragment length bounds as fractions of M
    double mutation_fragment_min = 0.05;
    double mutation_fragment_max = 0.3;

    // termination: stop when I_cur >= max(idle_growth * I_max, 0.05 M + C)
    double idle_growth = 1.5;
    double idle_cluster_coeff = 0.05;
    double idle_const_symmetric = 5.0;
    double idle_const_asymmetric = 10.0;

    std::uint64_t rng_seed = 1;

    double first_gen_multiplier(bool symmetric) const {
        return symmetric ? first_gen_multiplier_symmetric : first_gen_multiplier_asymmetric;
    }
    double idle_const(bool symmetric) const {
        return symmetric ? idle_const_symmetric : idle_const_asymmetric;
    }

    // assigns a field by its name, for --param name=value overrides
    void set(const std::string& name, double value) {
        if (name == "first_gen_multiplier_symmetric") first_gen_multiplier_symmetric = value;
        else if (name == "first_gen_multiplier_asymmetric") first_gen_multiplier_asymmetric = value;
        else if (name == "r_gen_coeff") r_gen_coeff = value;
        else if (name == "r_cluster_coeff") r_cluster_coeff = value;
        else if (name == "r_const") r_const = value;
        else if (name == "reproduction_multiplier") reproduction_multiplier = static_cast<int>(value);
        else if (name == "crossover_multiplier") crossover_multiplier = static_cast<int>(value);
        else if (name == "mutation_multiplier") mutation_multiplier = static_cast<int>(value);
        else if (name == "crossover_elite_fraction") crossover_elite_fraction = value;
        else if (name == "mutation_elite_fraction") mutation_elite_fraction = value;
        else if (name == "mutation_fragment_min") mutation_fragment_min = value;
        else if (name == "mutation_fragment_max") mutation_fragment_max = value;
        else if (name == "idle_growth") idle_growth = value;
        else if (name == "idle_cluster_coeff") idle_cluster_coeff = value;
        else if (name == "idle_const_symmetric") idle_const_symmetric = value;
        else if (name == "idle_const_asymmetric") idle_const_asymmetric = value;
        else if (name == "rng_seed") rng_seed = static_cast<std::uint64_t>(value);
        else throw std::invalid_argument("unknown parameter '" + name + "'");
    }
};

struct GenerationBudget {
    int r;
    int reproductions;
    int crossovers;
    int mutations;
};

// r = 0.2 G + 0.05 M + 10 (rounded to nearest), where G counts the
// generations produced before the current one.
inline GenerationBudget generation_budget(int generations_before, int m,
                                          const GaParams& params = {}) {
    const double raw = params.r_gen_coeff * generations_before + params.r_cluster_coeff * m +
                       params.r_const;
    const int r = static_cast<int>(std::llround(raw));
    return {r, params.reproduction_multiplier * r, params.crossover_multiplier * r,
            params.mutation_multiplier * r};
}

}  // namespace gtsp
