#ifndef CCGSA_GROUPING_HPP
#define CCGSA_GROUPING_HPP

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "ccgsa/evaluator.hpp"
#include "ccgsa/objective.hpp"

namespace ccgsa {

struct GroupingConfig {
    /// Interaction detection threshold on |delta1 - delta2|.
    double epsilon_dg = 1e-3;
    /// Probe step for the perturbed dimension. Unset means full span
    /// (upper - lower), which maximizes the interaction signal.
    std::optional<double> probe_delta;
    /// Probe origin. Unset means the lower-bound corner.
    std::optional<std::vector<double>> base_point;

    void validate() const {
        if (!(epsilon_dg > 0.0)) throw ConfigError("grouping: epsilon_dg must be positive");
        if (probe_delta && !(*probe_delta > 0.0))
            throw ConfigError("grouping: probe_delta must be positive");
    }
};

struct GroupingReport {
    GroupStructure structure;
    std::uint64_t evaluations_used = 0;
    std::uint64_t pairwise_checks = 0;
};

/// Shared evaluation counter for interaction probes. Increments are atomic
/// so probes for disjoint pairs may run concurrently.
struct EvalCounter {
    std::atomic<std::uint64_t> count{0};
};

/// Finite-difference interaction test between dimensions i and j:
/// delta1 is the fitness change from pushing x_i by the probe step with x_j
/// at the base point; delta2 is the same change with x_j moved to mid-range.
/// The pair interacts when |delta1 - delta2| exceeds epsilon_dg.
/// Costs exactly 4 evaluations.
bool detect_interaction(const Objective& obj, int i, int j, const GroupingConfig& cfg,
                        EvalCounter& counter);

/// Partitions all dimensions by sweeping: each unassigned dimension opens a
/// group, every member of the group is tested against the remaining
/// unassigned dimensions, and interacting ones join (so chains of pairwise
/// interactions close transitively). Dimensions with no interactions come
/// out as singleton groups. Probe values are cached, so a pairwise check
/// adds at most one fresh evaluation after warm-up.
GroupingReport group(const Objective& obj, const GroupingConfig& cfg);

/// Budget-aware variant used when grouping shares an evaluation budget with
/// the optimization stage; throws GroupingBudgetError if the budget runs out
/// mid-sweep.
GroupingReport group(Evaluator& ev, const GroupingConfig& cfg);

/// Raised when the evaluation budget dies before the sweep finishes; carries
/// whatever blocks had been closed by then.
struct GroupingBudgetError : BudgetExhausted {
    explicit GroupingBudgetError(GroupingReport partial_report)
        : BudgetExhausted("evaluation budget exhausted before grouping completed"),
          partial(std::move(partial_report)) {}
    GroupingReport partial;
};

} // namespace ccgsa

#endif
