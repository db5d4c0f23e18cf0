#ifndef CCGSA_HARNESS_HPP
#define CCGSA_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccgsa/benchmarks.hpp"
#include "ccgsa/cc.hpp"
#include "ccgsa/gsa.hpp"

namespace ccgsa {

enum class Algorithm { Gsa, CcgsaDg };

Algorithm algorithm_from_string(const std::string& s);
std::string to_string(Algorithm a);

/// What to optimize: a classical function or a structured composite.
struct ProblemSpec {
    enum class Kind { Classical, Structured } kind = Kind::Classical;
    ClassicalId classical = ClassicalId::F1;
    int dim = 30;
    Category category = Category::TenGroup;
    BaseKind base = BaseKind::SchwefelDoubleSum;
    int group_size = 5;
    std::uint64_t problem_seed = 1;

    std::string label() const;
    Objective build() const;
    /// Ground-truth partition, available for structured problems only.
    std::optional<GroupStructure> truth() const;
};

struct ExperimentConfig {
    Algorithm algorithm = Algorithm::Gsa;
    ProblemSpec problem;
    int runs = 25;
    std::uint64_t base_seed = 1;
    GsaParams gsa;       // used when algorithm == Gsa
    CcConfig cc;         // used when algorithm == CcgsaDg
    std::uint64_t fe_budget = 200'000;
    std::string output_dir = "out";
    std::uint64_t trace_stride = 1000;
    int workers = 1;
    bool emit_groups = false;

    void validate() const;
    /// Stable hash of everything that determines the results (output dir,
    /// workers, and emit flags excluded).
    std::string fingerprint() const;
};

/// Flat key=value config file ('#' starts a comment). Unknown keys are
/// rejected. Keys mirror the ExperimentConfig fields; see configs/ for
/// examples.
ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text, const std::string& origin);
void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Everything one seeded run produced.
struct RunRecord {
    std::string fingerprint;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;
    double best_fitness = 0.0;
    std::vector<double> best_position;
    std::uint64_t evaluations_used = 0;
    double duration_ms = 0.0;
    Trace trace;
    GroupStructure groups; // ccgsa-dg only
    std::uint64_t grouping_evaluations = 0;
    std::uint64_t pairwise_checks = 0;
};

struct SummaryRow {
    std::string function;
    int dim = 0;
    std::string algorithm;
    int runs = 0;
    double best = 0.0;
    double median = 0.0;
    double mean = 0.0;
    double worst = 0.0;
    double mean_evaluations = 0.0;
};

struct ExperimentResult {
    std::vector<RunRecord> records;
    SummaryRow summary;
};

/// Executes `runs` independent seeded runs (seed = base_seed + run index),
/// in parallel up to `workers`, writing per-run trace and record files, a
/// summary, convergence data, and optionally the recovered grouping to
/// output_dir. A numeric failure in one run is recorded in that run's
/// record without aborting the siblings.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Same, but on a caller-supplied objective instead of cfg.problem.
ExperimentResult run_experiment(const ExperimentConfig& cfg, const Objective& obj);

/// Computes the summary row from run records (failed runs excluded).
SummaryRow summarize(const ExperimentConfig& cfg, const std::vector<RunRecord>& records);

/// Merged convergence table: one row per distinct evaluation count, one
/// column per run (best-so-far, forward-filled) plus a median column.
std::string convergence_table(const std::vector<RunRecord>& records);

/// Reads run_*.record files from a directory back into records
/// (trace files are loaded alongside when present).
std::vector<RunRecord> load_records(const std::string& dir);

/// Re-derives a summary from a results directory and rewrites summary.tsv.
SummaryRow summarize_directory(const std::string& dir);

/// Rows keyed by (function, dim), one column per algorithm. Values are the
/// median final fitnesses. Missing cells are gaps, not errors.
struct ComparisonTable {
    std::vector<std::string> algorithms;
    std::vector<std::pair<std::pair<std::string, int>, std::vector<std::optional<double>>>> rows;

    std::string pretty() const;       // 3 significant digits, scientific
    std::string machine_readable() const; // full-precision TSV
};

ComparisonTable compare_summaries(const std::vector<SummaryRow>& summaries);
SummaryRow load_summary(const std::string& dir);
ComparisonTable parse_comparison_tsv(const std::string& text);

std::string format_full(double v);   // round-trippable %.17g
std::string format_sci3(double v);   // 3 significant digits

} // namespace ccgsa

#endif
