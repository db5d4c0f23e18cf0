#include "ccgsa/cc.hpp"

#include <algorithm>
#include <cmath>

namespace ccgsa {

ContextPopulation make_context(std::span<const double> base, const std::vector<int>& group,
                               const Matrix& subpop) {
    if (subpop.cols() != group.size())
        throw ConfigError("make_context: subpop column count does not match group size");
    ContextPopulation ctx;
    ctx.base.assign(base.begin(), base.end());
    ctx.rows = Matrix(subpop.rows(), base.size());
    for (std::size_t r = 0; r < subpop.rows(); ++r) {
        auto row = ctx.rows.row(r);
        std::copy(base.begin(), base.end(), row.begin());
        for (std::size_t k = 0; k < group.size(); ++k) row[group[k]] = subpop(r, k);
    }
    return ctx;
}

bool ContextPopulation::consistent(const std::vector<int>& group) const {
    std::vector<char> in_group(base.size(), 0);
    for (int d : group) in_group[d] = 1;
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        const auto row = rows.row(r);
        for (std::size_t d = 0; d < base.size(); ++d)
            if (!in_group[d] && row[d] != base[d]) return false;
    }
    return true;
}

double subcomponent_fitness(std::span<const double> base, const std::vector<int>& group,
                            std::span<const double> sub_x, Evaluator& ev) {
    if (sub_x.size() != group.size())
        throw ConfigError("subcomponent_fitness: sub-vector length does not match group size");
    std::vector<double> full(base.begin(), base.end());
    for (std::size_t k = 0; k < group.size(); ++k) full[group[k]] = sub_x[k];
    return ev(full);
}

void write_back(Matrix& pop, const std::vector<int>& group, const Matrix& subpop) {
    if (group.empty()) throw ConfigError("write_back: empty group");
    if (subpop.rows() != pop.rows() || subpop.cols() != group.size())
        throw ConfigError("write_back: subpop shape does not match pop and group");
    for (int d : group)
        if (d < 0 || static_cast<std::size_t>(d) >= pop.cols())
            throw ConfigError("write_back: group index out of range");
    for (std::size_t r = 0; r < pop.rows(); ++r)
        for (std::size_t k = 0; k < group.size(); ++k)
            pop(r, group[k]) = subpop(r, k);
}

namespace {

// Restriction of obj to the group's coordinates; evaluation substitutes the
// sub-vector into the context member and charges the shared evaluator.
Objective make_subobjective(const Objective& obj, const std::vector<int>& group,
                            const std::vector<double>& base, Evaluator& ev) {
    Objective sub;
    sub.name = obj.name + "-sub";
    sub.dim = static_cast<int>(group.size());
    sub.lower.resize(group.size());
    sub.upper.resize(group.size());
    for (std::size_t k = 0; k < group.size(); ++k) {
        sub.lower[k] = obj.lower[group[k]];
        sub.upper[k] = obj.upper[group[k]];
    }
    sub.eval = [&obj, &group, &base, &ev](std::span<const double> sx) {
        thread_local std::vector<double> full;
        full.assign(base.begin(), base.end());
        for (std::size_t k = 0; k < group.size(); ++k) full[group[k]] = sx[k];
        return ev(full);
    };
    return sub;
}

} // namespace

RunResult run_ccgsa_dg(const Objective& obj, const CcConfig& cfg, Rng& rng,
                       std::uint64_t trace_stride, const CcObserver* observer) {
    cfg.validate();
    obj.validate();
    const int n = cfg.gsa.pop_size;
    const int dim = obj.dim;

    Evaluator ev(obj, cfg.fe_budget, trace_stride);
    GroupingReport grouping = group(ev, cfg.grouping); // throws GroupingBudgetError when starved

    Matrix pop(n, dim);
    for (int i = 0; i < n; ++i)
        for (int d = 0; d < dim; ++d) pop(i, d) = rng.uniform(obj.lower[d], obj.upper[d]);

    std::vector<double> pop_fit(n);
    std::vector<double> base(dim);
    RunResult res;
    res.subcomponent_best.assign(dim, std::numeric_limits<double>::quiet_NaN());

    const std::uint64_t per_invocation =
        static_cast<std::uint64_t>(n) * (static_cast<std::uint64_t>(cfg.gsa.max_iter) + 1);

    bool out_of_budget = false;
    for (int cycle = 0; cycle < cfg.cycles && !out_of_budget; ++cycle) {
        if (ev.remaining() < static_cast<std::uint64_t>(n)) break;
        if (observer && observer->on_cycle_begin) observer->on_cycle_begin(cycle);

        for (int i = 0; i < n; ++i) pop_fit[i] = ev(pop.row(i));
        int best_row = 0;
        for (int i = 1; i < n; ++i)
            if (pop_fit[i] < pop_fit[best_row]) best_row = i;
        const auto br = pop.row(best_row);
        base.assign(br.begin(), br.end());
        if (observer && observer->on_cycle_best) observer->on_cycle_best(cycle, base);

        for (std::size_t gi = 0; gi < grouping.structure.groups.size(); ++gi) {
            const auto& g = grouping.structure.groups[gi];
            const std::uint64_t allowance = std::min(ev.remaining(), per_invocation);
            if (allowance < static_cast<std::uint64_t>(n)) {
                out_of_budget = true;
                break;
            }
            if (observer && observer->on_group_begin)
                observer->on_group_begin(cycle, static_cast<int>(gi), g);

            const Objective sub = make_subobjective(obj, g, base, ev);
            Matrix seed(n, g.size());
            for (int i = 0; i < n; ++i)
                for (std::size_t k = 0; k < g.size(); ++k) seed(i, k) = pop(i, g[k]);

            GsaResult r = run_gsa(sub, cfg.gsa, allowance, rng, nullptr, 0, &seed);
            write_back(pop, g, r.final_positions);
            for (std::size_t k = 0; k < g.size(); ++k)
                res.subcomponent_best[g[k]] = r.best_position[k];
            if (cfg.refresh_best_per_group)
                for (std::size_t k = 0; k < g.size(); ++k) base[g[k]] = r.best_position[k];
        }
        if (!out_of_budget) ++res.cycles_completed;
    }

    res.best_position = ev.best_point();
    res.best_fitness = ev.best_fitness();
    res.trace = ev.trace();
    res.groups = std::move(grouping.structure);
    res.evaluations_used = ev.used();
    res.grouping_evaluations = grouping.evaluations_used;
    res.pairwise_checks = grouping.pairwise_checks;
    return res;
}

} // namespace ccgsa
