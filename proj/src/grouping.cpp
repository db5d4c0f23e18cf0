#include "ccgsa/grouping.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace ccgsa {

namespace {

struct Probe {
    std::vector<double> base;
    std::vector<double> delta;
    std::vector<double> mid;
};

Probe make_probe(const Objective& obj, const GroupingConfig& cfg) {
    Probe p;
    p.base = cfg.base_point.value_or(obj.lower);
    if (static_cast<int>(p.base.size()) != obj.dim)
        throw ConfigError("grouping: base point size does not match objective dim");
    p.delta.resize(obj.dim);
    p.mid.resize(obj.dim);
    for (int d = 0; d < obj.dim; ++d) {
        p.delta[d] = cfg.probe_delta.value_or(obj.upper[d] - obj.lower[d]);
        p.mid[d] = 0.5 * (obj.lower[d] + obj.upper[d]);
    }
    return p;
}

double checked(double f) {
    if (!std::isfinite(f)) throw NumericError("grouping: objective returned a non-finite value");
    return f;
}

} // namespace

bool detect_interaction(const Objective& obj, int i, int j, const GroupingConfig& cfg,
                        EvalCounter& counter) {
    cfg.validate();
    if (i == j) throw ConfigError("detect_interaction: i and j must differ");
    if (i < 0 || j < 0 || i >= obj.dim || j >= obj.dim)
        throw ConfigError("detect_interaction: dimension index out of range");
    const Probe p = make_probe(obj, cfg);

    std::vector<double> x = p.base;
    auto eval = [&](const std::vector<double>& v) {
        counter.count.fetch_add(1, std::memory_order_relaxed);
        return checked(obj.eval(v));
    };

    const double f_base = eval(x);
    x[i] = p.base[i] + p.delta[i];
    const double f_i = eval(x);
    const double delta1 = f_i - f_base;

    x = p.base;
    x[j] = p.mid[j];
    const double f_j = eval(x);
    x[i] = p.base[i] + p.delta[i];
    const double f_ij = eval(x);
    const double delta2 = f_ij - f_j;

    return std::abs(delta1 - delta2) > cfg.epsilon_dg;
}

namespace {

// Sweep core shared by the two public entry points. `eval` charges whoever
// owns the budget; BudgetExhausted escaping from it aborts the sweep.
GroupingReport sweep(const Objective& obj, const GroupingConfig& cfg,
                     const std::function<double(std::span<const double>)>& eval,
                     std::uint64_t* used_out) {
    cfg.validate();
    obj.validate();
    const int dim = obj.dim;
    const Probe p = make_probe(obj, cfg);

    std::uint64_t used = 0;
    auto run = [&](const std::vector<double>& v) {
        const double f = checked(eval(v));
        ++used;
        return f;
    };

    GroupingReport rep;
    std::vector<double> x = p.base;
    const double not_cached = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> f_up(dim, not_cached);  // f(base with dim d pushed by delta)
    std::vector<double> f_mid(dim, not_cached); // f(base with dim d at mid-range)
    double f_base = 0.0;
    bool have_base = false;

    std::vector<int> remaining(dim);
    for (int d = 0; d < dim; ++d) remaining[d] = d;

    try {
        while (!remaining.empty()) {
            const int head = remaining.front();
            remaining.erase(remaining.begin());
            std::vector<int> members{head};
            std::deque<int> queue{head};
            while (!queue.empty()) {
                const int m = queue.front();
                queue.pop_front();
                if (remaining.empty()) break;
                if (!have_base) {
                    f_base = run(p.base);
                    have_base = true;
                }
                if (std::isnan(f_up[m])) {
                    x = p.base;
                    x[m] = p.base[m] + p.delta[m];
                    f_up[m] = run(x);
                }
                const double delta1 = f_up[m] - f_base;
                std::vector<int> still_free;
                still_free.reserve(remaining.size());
                for (int j : remaining) {
                    if (std::isnan(f_mid[j])) {
                        x = p.base;
                        x[j] = p.mid[j];
                        f_mid[j] = run(x);
                    }
                    x = p.base;
                    x[j] = p.mid[j];
                    x[m] = p.base[m] + p.delta[m];
                    const double f_both = run(x);
                    const double delta2 = f_both - f_mid[j];
                    ++rep.pairwise_checks;
                    if (std::abs(delta1 - delta2) > cfg.epsilon_dg) {
                        members.push_back(j);
                        queue.push_back(j);
                    } else {
                        still_free.push_back(j);
                    }
                }
                remaining = std::move(still_free);
            }
            std::sort(members.begin(), members.end());
            rep.structure.groups.push_back(std::move(members));
        }
    } catch (const BudgetExhausted&) {
        rep.evaluations_used = used;
        if (used_out) *used_out = used;
        throw GroupingBudgetError(std::move(rep));
    }

    rep.evaluations_used = used;
    if (used_out) *used_out = used;
    rep.structure.validate(dim);
    return rep;
}

} // namespace

GroupingReport group(const Objective& obj, const GroupingConfig& cfg) {
    return sweep(obj, cfg, [&obj](std::span<const double> v) { return obj.eval(v); }, nullptr);
}

GroupingReport group(Evaluator& ev, const GroupingConfig& cfg) {
    return sweep(ev.objective(), cfg, [&ev](std::span<const double> v) { return ev(v); }, nullptr);
}

} // namespace ccgsa
