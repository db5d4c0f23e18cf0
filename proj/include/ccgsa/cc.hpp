#ifndef CCGSA_CC_HPP
#define CCGSA_CC_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ccgsa/evaluator.hpp"
#include "ccgsa/grouping.hpp"
#include "ccgsa/gsa.hpp"
#include "ccgsa/matrix.hpp"
#include "ccgsa/objective.hpp"
#include "ccgsa/rng.hpp"

namespace ccgsa {

struct CcConfig {
    /// Full passes of subcomponent optimization over all groups.
    int cycles = 20;
    /// Inner optimizer settings; pop_size is also the outer population size.
    GsaParams gsa;
    /// Hard ceiling on total evaluations: grouping, outer population
    /// evaluations, and all subcomponent runs together.
    std::uint64_t fe_budget = 3'000'000;
    GroupingConfig grouping;
    std::uint64_t seed = 1;
    /// When true, the context member absorbs each group's best sub-vector
    /// immediately after that group is optimized, instead of being fixed for
    /// the whole cycle.
    bool refresh_best_per_group = false;

    void validate() const {
        if (cycles < 1) throw ConfigError("cc: cycles must be >= 1");
        if (fe_budget == 0) throw ConfigError("cc: fe_budget must be positive");
        gsa.validate();
        grouping.validate();
    }
};

/// The population a subcomponent is optimized inside: every row agrees with
/// the context member everywhere outside the active group.
struct ContextPopulation {
    std::vector<double> base;
    Matrix rows;

    /// True when every row matches base outside `group`.
    bool consistent(const std::vector<int>& group) const;
};

/// Materializes the context rows for a group from the free-column matrix.
ContextPopulation make_context(std::span<const double> base, const std::vector<int>& group,
                               const Matrix& subpop);

/// Fitness of a sub-vector: the context member with the group's coordinates
/// replaced by sub_x, evaluated through `ev` (one evaluation).
double subcomponent_fitness(std::span<const double> base, const std::vector<int>& group,
                            std::span<const double> sub_x, Evaluator& ev);

/// Replaces the `group` columns of pop with subpop, row by row. All other
/// columns are untouched.
void write_back(Matrix& pop, const std::vector<int>& group, const Matrix& subpop);

/// Optional instrumentation hooks; any unset member is simply skipped.
struct CcObserver {
    std::function<void(int cycle)> on_cycle_begin;
    std::function<void(int cycle, std::span<const double> best)> on_cycle_best;
    std::function<void(int cycle, int group_index, const std::vector<int>& dims)> on_group_begin;
};

struct RunResult {
    std::vector<double> best_position;
    double best_fitness = 0.0;
    Trace trace;
    GroupStructure groups;
    std::uint64_t evaluations_used = 0;
    std::uint64_t grouping_evaluations = 0;
    std::uint64_t pairwise_checks = 0;
    int cycles_completed = 0;
    /// Per-coordinate record of the best sub-vector each group's latest
    /// subcomponent run found; diagnostic only.
    std::vector<double> subcomponent_best;
};

/// The combined optimizer: group once by differential grouping (charged to
/// the budget), then for each cycle pick the best population member as the
/// context and optimize every group with GSA inside that context, writing
/// optimized columns back into the population. Each subcomponent run is
/// granted min(remaining budget, pop_size * (max_iter + 1)) evaluations; the
/// run stops when the cycles finish or nothing useful fits in the remaining
/// budget. Returns the best candidate ever evaluated.
RunResult run_ccgsa_dg(const Objective& obj, const CcConfig& cfg, Rng& rng,
                       std::uint64_t trace_stride = 0, const CcObserver* observer = nullptr);

} // namespace ccgsa

#endif
