#ifndef CCGSA_EVALUATOR_HPP
#define CCGSA_EVALUATOR_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "ccgsa/errors.hpp"
#include "ccgsa/objective.hpp"

namespace ccgsa {

/// One trace point: (evaluations consumed so far, best fitness so far).
using TracePoint = std::pair<std::uint64_t, double>;
using Trace = std::vector<TracePoint>;

/// Counts objective evaluations against a hard budget, keeps the best-ever
/// candidate, and records a best-so-far trace. Every optimizer in this
/// library evaluates through one of these, which is what makes the budget
/// and trace invariants enforceable in one place.
///
/// Trace policy: a point is recorded whenever the best improves, and at
/// every `trace_stride` evaluations when a stride is given. Evaluation
/// counts in the trace are strictly increasing.
class Evaluator {
public:
    Evaluator(const Objective& obj, std::uint64_t budget, std::uint64_t trace_stride = 0)
        : obj_(&obj), budget_(budget), stride_(trace_stride) {}

    double operator()(std::span<const double> x) {
        if (used_ >= budget_) throw BudgetExhausted("evaluation budget exhausted");
        ++used_;
        const double f = obj_->eval(x);
        if (!std::isfinite(f))
            throw NumericError("objective '" + obj_->name + "' returned a non-finite value at evaluation " +
                               std::to_string(used_));
        if (f < best_) {
            best_ = f;
            best_x_.assign(x.begin(), x.end());
            record(f);
        } else if (stride_ != 0 && used_ % stride_ == 0) {
            record(best_);
        }
        return f;
    }

    const Objective& objective() const { return *obj_; }
    std::uint64_t used() const { return used_; }
    std::uint64_t budget() const { return budget_; }
    std::uint64_t remaining() const { return budget_ - used_; }
    bool has_best() const { return !best_x_.empty(); }
    double best_fitness() const { return best_; }
    const std::vector<double>& best_point() const { return best_x_; }
    const Trace& trace() const { return trace_; }

private:
    void record(double best) {
        if (!trace_.empty() && trace_.back().first == used_)
            trace_.back().second = best;
        else
            trace_.emplace_back(used_, best);
    }

    const Objective* obj_;
    std::uint64_t budget_;
    std::uint64_t used_ = 0;
    std::uint64_t stride_;
    double best_ = std::numeric_limits<double>::infinity();
    std::vector<double> best_x_;
    Trace trace_;
};

} // namespace ccgsa

#endif
