#pragma once

#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtsp/ga/engine.hpp"
#include "gtsp/io/clustering.hpp"
#include "gtsp/io/gtsp_format.hpp"
#include "gtsp/io/tsplib.hpp"

namespace gtsp {

inline double error_percent(double value, double opt) {
    if (opt <= 0) throw std::domain_error("reference length must be positive");
    return (value - opt) / opt * 100.0;
}

struct ExperimentConfig {
    std::vector<std::string> instance_paths;
    int runs = 10;
    std::map<std::string, Weight> reference;  // instance name -> best known length
    std::uint64_t seed_base = 1;
    int parallelism = 1;
    GaParams params;
};

struct RunRow {
    std::string instance;
    int m = 0;
    int n = 0;
    int run = 0;
    std::uint64_t seed = 0;
    Weight length = 0;
    std::optional<double> error_pct;
    double seconds = 0.0;
    int generations = 0;
};

struct SummaryRow {
    std::string instance;
    std::optional<Weight> reference;
    double mean_length = 0.0;
    std::optional<double> error_pct;
    std::optional<double> optimum_hit_pct;
    double mean_seconds = 0.0;
    double mean_generations = 0.0;
    bool failed = false;
    std::string failure;
};

struct ExperimentResult {
    std::vector<RunRow> runs;
    std::vector<SummaryRow> summary;
};

// Two-column text file: instance name, best known length.
inline std::map<std::string, Weight> read_reference_table(std::istream& in) {
    std::map<std::string, Weight> table;
    std::string name;
    Weight length;
    while (in >> name >> length) table[name] = length;
    return table;
}

inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.runs < 1) throw std::invalid_argument("runs must be >= 1");
    ExperimentResult result;

    for (const auto& path : cfg.instance_paths) {
        SummaryRow summary;
        std::ifstream file(path);
        if (!file) {
            summary.instance = path;
            summary.failed = true;
            summary.failure = "unreadable file";
            result.summary.push_back(std::move(summary));
            continue;
        }
        std::optional<GtspInstance> parsed;
        try {
            // TSP inputs are clustered on the fly, like the solve command
            if (path.ends_with(".tsp") || path.ends_with(".atsp"))
                parsed = cluster_tsp(parse_tsplib(file));
            else
                parsed = read_gtsp(file);
        } catch (const std::exception& e) {
            summary.instance = path;
            summary.failed = true;
            summary.failure = e.what();
            result.summary.push_back(std::move(summary));
            continue;
        }
        const GtspInstance& inst = *parsed;

        summary.instance = inst.name();
        const auto ref = cfg.reference.find(inst.name());
        if (ref != cfg.reference.end()) summary.reference = ref->second;

        auto run_one = [&](int run) {
            GaParams params = cfg.params;
            params.rng_seed = cfg.seed_base + static_cast<std::uint64_t>(run);
            const RunReport report = solve(inst, params);
            RunRow row;
            row.instance = inst.name();
            row.m = inst.m();
            row.n = inst.n();
            row.run = run;
            row.seed = params.rng_seed;
            row.length = report.best.length;
            if (summary.reference)
                row.error_pct = error_percent(static_cast<double>(report.best.length),
                                              static_cast<double>(*summary.reference));
            row.seconds = report.seconds;
            row.generations = report.generations;
            return row;
        };

        std::vector<RunRow> rows(cfg.runs);
        if (cfg.parallelism > 1) {
            std::vector<std::future<RunRow>> futures;
            futures.reserve(cfg.runs);
            for (int run = 0; run < cfg.runs; ++run)
                futures.push_back(std::async(std::launch::async, run_one, run));
            for (int run = 0; run < cfg.runs; ++run) rows[run] = futures[run].get();
        } else {
            for (int run = 0; run < cfg.runs; ++run) rows[run] = run_one(run);
        }

        double sum_len = 0, sum_sec = 0, sum_gen = 0;
        int hits = 0;
        for (const auto& row : rows) {
            sum_len += static_cast<double>(row.length);
            sum_sec += row.seconds;
            sum_gen += row.generations;
            if (summary.reference && row.length == *summary.reference) ++hits;
        }
        summary.mean_length = sum_len / cfg.runs;
        summary.mean_seconds = sum_sec / cfg.runs;
        summary.mean_generations = sum_gen / cfg.runs;
        if (summary.reference) {
            summary.error_pct =
                error_percent(summary.mean_length, static_cast<double>(*summary.reference));
            summary.optimum_hit_pct = 100.0 * hits / cfg.runs;
        }

        for (auto& row : rows) result.runs.push_back(std::move(row));
        result.summary.push_back(std::move(summary));
    }
    return result;
}

inline void write_runs_csv(const std::vector<RunRow>& rows, std::ostream& out) {
    out << "instance,m,n,run,seed,length,error_pct,seconds,generations\n";
    for (const auto& row : rows) {
        out << row.instance << ',' << row.m << ',' << row.n << ',' << row.run << ',' << row.seed
            << ',' << row.length << ',';
        if (row.error_pct) out << std::fixed << std::setprecision(2) << *row.error_pct;
        out << ',' << std::fixed << std::setprecision(3) << row.seconds << ','
            << row.generations << '\n';
    }
}

inline void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
    out << "instance,opt,value,error_pct,opt_pct,seconds,generations\n";
    for (const auto& row : rows) {
        out << row.instance << ',';
        if (row.failed) {
            out << ",,,,," << "FAILED: " << row.failure << '\n';
            continue;
        }
        if (row.reference) out << *row.reference;
        out << ',' << std::fixed << std::setprecision(1) << row.mean_length << ',';
        if (row.error_pct) out << std::fixed << std::setprecision(2) << *row.error_pct;
        out << ',';
        if (row.optimum_hit_pct) out << std::fixed << std::setprecision(0) << *row.optimum_hit_pct;
        out << ',' << std::fixed << std::setprecision(3) << row.mean_seconds << ','
            << std::fixed << std::setprecision(1) << row.mean_generations << '\n';
    }
}

}  // namespace gtsp
