#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccgsa/harness.hpp"

using namespace ccgsa;

namespace {

int cmd_run(const std::string& config_path, const std::vector<std::pair<std::string, std::string>>& overrides) {
    ExperimentConfig cfg;
    if (!config_path.empty()) cfg = parse_config_file(config_path);
    for (const auto& [k, v] : overrides) apply_config_entry(cfg, k, v);

    const auto result = run_experiment(cfg);
    const auto& s = result.summary;
    std::cout << "experiment " << cfg.fingerprint() << ": " << s.function << " dim " << s.dim
              << " " << s.algorithm << "\n"
              << "  runs ok      " << s.runs << "/" << cfg.runs << "\n"
              << "  best         " << format_full(s.best) << "\n"
              << "  median       " << format_full(s.median) << "\n"
              << "  mean         " << format_full(s.mean) << "\n"
              << "  worst        " << format_full(s.worst) << "\n"
              << "  mean evals   " << format_full(s.mean_evaluations) << "\n"
              << "  output dir   " << cfg.output_dir << "\n";
    for (const auto& r : result.records)
        if (!r.ok) std::cout << "  run " << r.seed << " FAILED: " << r.error << "\n";
    return 0;
}

int cmd_summarize(const std::string& dir) {
    const SummaryRow s = summarize_directory(dir);
    std::cout << "function\tdim\talgorithm\truns\tbest\tmedian\tmean\tworst\tmean_evals\n"
              << s.function << '\t' << s.dim << '\t' << s.algorithm << '\t' << s.runs << '\t'
              << format_full(s.best) << '\t' << format_full(s.median) << '\t'
              << format_full(s.mean) << '\t' << format_full(s.worst) << '\t'
              << format_full(s.mean_evaluations) << '\n';
    return 0;
}

int cmd_compare(const std::vector<std::string>& dirs, const std::string& out_path) {
    std::vector<SummaryRow> rows;
    rows.reserve(dirs.size());
    for (const auto& d : dirs) rows.push_back(load_summary(d));
    const ComparisonTable table = compare_summaries(rows);
    std::cout << table.pretty();
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw IoError("cannot write '" + out_path + "'");
        out << table.machine_readable();
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gravitational-search and cooperative-coevolution experiment runner"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Execute a seeded multi-run experiment");
    std::string config_path;
    run->add_option("--config", config_path, "Flat key=value config file");
    std::optional<std::string> algorithm, function, out_dir;
    std::optional<int> dim, runs, cycles, pop, workers;
    std::optional<std::uint64_t> seed, fe_budget;
    std::optional<double> epsilon_dg;
    bool emit_groups = false;
    run->add_option("--algorithm", algorithm, "gsa or ccgsa-dg");
    run->add_option("--function", function, "F1 F4 F6 F8 F9 F10 Griewank or 'structured'");
    run->add_option("--dim", dim, "Problem dimension");
    run->add_option("--runs", runs, "Number of seeded runs");
    run->add_option("--seed", seed, "Base seed; run r uses seed base+r");
    run->add_option("--fe-budget", fe_budget, "Evaluation budget per run");
    run->add_option("--cycles", cycles, "Subcomponent optimization cycles (ccgsa-dg)");
    run->add_option("--pop", pop, "Population size (applies to gsa and cc.gsa)");
    run->add_option("--epsilon-dg", epsilon_dg, "Interaction detection threshold");
    run->add_flag("--emit-groups", emit_groups, "Write the recovered grouping to groups.txt");
    run->add_option("--out", out_dir, "Output directory");
    run->add_option("--workers", workers, "Concurrent runs");

    // summarize
    auto* summarize_cmd = app.add_subcommand("summarize", "Recompute the summary from run records");
    std::string in_dir;
    summarize_cmd->add_option("--in", in_dir, "Results directory")->required();

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "Tabulate medians across experiments");
    std::vector<std::string> in_dirs;
    std::string compare_out = "compare.tsv";
    compare_cmd->add_option("--in", in_dirs, "Results directories")->required()->expected(-1);
    compare_cmd->add_option("--out", compare_out, "Machine-readable output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            std::vector<std::pair<std::string, std::string>> ov;
            if (algorithm) ov.emplace_back("algorithm", *algorithm);
            if (function) ov.emplace_back("function", *function);
            if (dim) ov.emplace_back("dim", std::to_string(*dim));
            if (runs) ov.emplace_back("runs", std::to_string(*runs));
            if (seed) ov.emplace_back("seed", std::to_string(*seed));
            if (fe_budget) ov.emplace_back("fe_budget", std::to_string(*fe_budget));
            if (cycles) ov.emplace_back("cc.cycles", std::to_string(*cycles));
            if (pop) {
                ov.emplace_back("gsa.pop", std::to_string(*pop));
                ov.emplace_back("cc.gsa.pop", std::to_string(*pop));
            }
            if (epsilon_dg) ov.emplace_back("cc.epsilon_dg", format_full(*epsilon_dg));
            if (emit_groups) ov.emplace_back("emit_groups", "true");
            if (out_dir) ov.emplace_back("out", *out_dir);
            if (workers) ov.emplace_back("workers", std::to_string(*workers));
            return cmd_run(config_path, ov);
        }
        if (summarize_cmd->parsed()) return cmd_summarize(in_dir);
        if (compare_cmd->parsed()) return cmd_compare(in_dirs, compare_out);
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
