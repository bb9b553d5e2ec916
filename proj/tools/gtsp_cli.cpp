#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gtsp/bench/harness.hpp"
#include "gtsp/ga/engine.hpp"
#include "gtsp/io/clustering.hpp"
#include "gtsp/io/gtsp_format.hpp"
#include "gtsp/io/tsplib.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;

gtsp::GaParams apply_overrides(gtsp::GaParams params,
                               const std::vector<std::string>& overrides) {
    for (const auto& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--param", "expected <name>=<value>, got '" + kv + "'");
        params.set(kv.substr(0, eq), std::stod(kv.substr(eq + 1)));
    }
    return params;
}

// Reads either a GTSP file or a TSPLIB file (clustered on the fly).
gtsp::GtspInstance load_instance(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    const std::string ext = std::filesystem::path(path).extension().string();
    if (ext == ".tsp" || ext == ".atsp") return gtsp::cluster_tsp(gtsp::parse_tsplib(file));
    return gtsp::read_gtsp(file);
}

int cmd_solve(const std::string& path, std::uint64_t seed,
              const std::vector<std::string>& overrides, const std::string& ref_path,
              bool verbose) {
    gtsp::GaParams params = apply_overrides({}, overrides);
    params.rng_seed = seed;

    const gtsp::GtspInstance inst = load_instance(path);
    const gtsp::RunReport report = gtsp::solve(inst, params);
    const gtsp::Chromosome tour = gtsp::canonical_form(inst, report.best);

    std::cout << "instance: " << inst.name() << " (n=" << inst.n() << ", m=" << inst.m()
              << (inst.symmetric() ? ", symmetric" : ", asymmetric") << ")\n";
    std::cout << "length: " << report.best.length << "\n";
    if (!ref_path.empty()) {
        std::ifstream ref_file(ref_path);
        if (!ref_file) throw std::runtime_error("cannot open '" + ref_path + "'");
        const auto table = gtsp::read_reference_table(ref_file);
        const auto it = table.find(inst.name());
        if (it != table.end())
            std::cout << "error_pct: " << std::fixed << std::setprecision(2)
                      << gtsp::error_percent(static_cast<double>(report.best.length),
                                             static_cast<double>(it->second))
                      << "\n";
    }
    std::cout << "generations: " << report.generations << "\n";
    std::cout << "seconds: " << std::fixed << std::setprecision(3) << report.seconds << "\n";
    std::cout << "tour:";
    for (int v : tour.genes) std::cout << ' ' << (v + 1);
    std::cout << "\n";
    if (verbose) {
        std::cout << "trace:";
        for (gtsp::Weight l : report.best_trace) std::cout << ' ' << l;
        std::cout << "\n";
    }
    return 0;
}

int cmd_cluster(const std::string& path, std::string out_path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    const gtsp::GtspInstance inst = gtsp::cluster_tsp(gtsp::parse_tsplib(file));
    if (out_path.empty()) out_path = inst.name() + ".gtsp";
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    gtsp::write_gtsp(inst, out);
    std::cout << "wrote " << out_path << " (n=" << inst.n() << ", m=" << inst.m() << ")\n";
    return 0;
}

int cmd_bench(const std::vector<std::string>& instances, const std::string& list_path, int runs,
              std::uint64_t seed, const std::string& ref_path, const std::string& out_prefix,
              int parallel, const std::vector<std::string>& overrides) {
    gtsp::ExperimentConfig cfg;
    cfg.instance_paths = instances;
    if (!list_path.empty()) {
        std::ifstream list(list_path);
        if (!list) throw std::runtime_error("cannot open '" + list_path + "'");
        std::string line;
        while (std::getline(list, line)) {
            line = gtsp::detail::trim(line);
            if (!line.empty()) cfg.instance_paths.push_back(line);
        }
    }
    if (cfg.instance_paths.empty()) throw std::runtime_error("no instances given");
    cfg.runs = runs;
    cfg.seed_base = seed;
    cfg.parallelism = parallel;
    cfg.params = apply_overrides({}, overrides);
    if (!ref_path.empty()) {
        std::ifstream ref_file(ref_path);
        if (!ref_file) throw std::runtime_error("cannot open '" + ref_path + "'");
        cfg.reference = gtsp::read_reference_table(ref_file);
    }

    const gtsp::ExperimentResult result = gtsp::run_experiment(cfg);

    std::ofstream runs_csv(out_prefix + "_runs.csv");
    gtsp::write_runs_csv(result.runs, runs_csv);
    std::ofstream summary_csv(out_prefix + "_summary.csv");
    gtsp::write_summary_csv(result.summary, summary_csv);
    gtsp::write_summary_csv(result.summary, std::cout);
    if (parallel > 1)
        std::cout << "# timings measured with parallelism=" << parallel << "\n";
    std::cout << "wrote " << out_prefix << "_runs.csv and " << out_prefix << "_summary.csv\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Memetic solver for the generalized traveling salesman problem"};
    app.require_subcommand(1);

    std::string input, out_path, ref_path, list_path;
    std::uint64_t seed = 1;
    int runs = 10;
    int parallel = 1;
    bool verbose = false;
    std::vector<std::string> overrides;
    std::vector<std::string> instances;

    auto* solve = app.add_subcommand("solve", "solve a GTSP or TSPLIB instance");
    solve->add_option("instance", input, "instance file (.gtsp, .tsp, .atsp)")->required();
    solve->add_option("--seed", seed, "random seed (default 1)");
    solve->add_option("--ref", ref_path, "reference optima table (name length per line)");
    solve->add_option("--param", overrides, "GA parameter override <name>=<value>");
    solve->add_flag("--verbose", verbose, "print per-generation best lengths");

    auto* cluster = app.add_subcommand("cluster", "convert a TSPLIB file to GTSP");
    cluster->add_option("instance", input, "TSPLIB file (.tsp, .atsp)")->required();
    cluster->add_option("--out", out_path, "output path (default <name>.gtsp)");

    auto* bench = app.add_subcommand("bench", "run a benchmark suite");
    bench->add_option("files", instances, "instance files (.gtsp, .tsp, .atsp)");
    bench->add_option("--instances", list_path, "file listing instance paths, one per line");
    bench->add_option("--runs", runs, "runs per instance (default 10)");
    bench->add_option("--seed", seed, "base seed; run i uses seed+i");
    bench->add_option("--ref", ref_path, "reference optima table");
    bench->add_option("--out", out_path, "output CSV prefix (default 'bench')");
    bench->add_option("--parallel", parallel, "concurrent runs (default 1)");
    bench->add_option("--param", overrides, "GA parameter override <name>=<value>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(input, seed, overrides, ref_path, verbose);
        if (cluster->parsed()) return cmd_cluster(input, out_path);
        if (bench->parsed())
            return cmd_bench(instances, list_path, runs, seed, ref_path,
                             out_path.empty() ? "bench" : out_path, parallel, overrides);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
