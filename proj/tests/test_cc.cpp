#include <doctest.h>

#include <cmath>

#include "ccgsa/benchmarks.hpp"
#include "ccgsa/cc.hpp"

using namespace ccgsa;

namespace {

CcConfig small_cc(int pop, int iters, int cycles, std::uint64_t budget) {
    CcConfig cfg;
    cfg.cycles = cycles;
    cfg.gsa.pop_size = pop;
    cfg.gsa.max_iter = iters;
    cfg.fe_budget = budget;
    return cfg;
}

} // namespace

TEST_CASE("subcomponent fitness substitutes into the context member") {
    auto sphere = make_classical(ClassicalId::F1, 5);
    Evaluator ev(sphere, 100);
    const std::vector<double> base(5, 0.0);

    const std::vector<int> g{3};
    const std::vector<double> sub{2.0};
    CHECK(subcomponent_fitness(base, g, sub, ev) == 4.0);
    CHECK(ev.used() == 1);

    // a full-dimension group is a plain evaluation
    const std::vector<int> all{0, 1, 2, 3, 4};
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0, 5.0};
    CHECK(subcomponent_fitness(base, all, v, ev) == sphere.eval(v));

    // substituting the optimum's own coordinates is the identity
    auto rast = make_classical(ClassicalId::F9, 6);
    Evaluator ev2(rast, 100);
    const auto& opt = *rast.x_opt;
    const std::vector<int> g2{1, 4};
    const std::vector<double> sub2{opt[1], opt[4]};
    CHECK(subcomponent_fitness(opt, g2, sub2, ev2) == doctest::Approx(*rast.f_opt).epsilon(1e-12));

    CHECK_THROWS_AS(subcomponent_fitness(base, g, v, ev), ConfigError);
}

TEST_CASE("write-back touches exactly the group columns") {
    Rng rng(4);
    Matrix pop(3, 4);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t d = 0; d < 4; ++d) pop(i, d) = rng.uniform(-1.0, 1.0);
    const Matrix before = pop;

    Matrix sub(3, 2);
    for (std::size_t i = 0; i < 3; ++i) {
        sub(i, 0) = 100.0 + i;
        sub(i, 1) = 200.0 + i;
    }
    write_back(pop, {0, 2}, sub);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(pop(i, 0) == sub(i, 0));
        CHECK(pop(i, 2) == sub(i, 1));
        CHECK(pop(i, 1) == before(i, 1)); // bit-identical
        CHECK(pop(i, 3) == before(i, 3));
    }

    // full replacement
    Matrix whole(3, 4, 7.0);
    write_back(pop, {0, 1, 2, 3}, whole);
    CHECK(pop == whole);

    CHECK_THROWS_AS(write_back(pop, {}, sub), ConfigError);
    CHECK_THROWS_AS(write_back(pop, {0}, sub), ConfigError);
    CHECK_THROWS_AS(write_back(pop, {0, 7}, sub), ConfigError);
}

TEST_CASE("context rows agree with the base outside the active group") {
    const std::vector<double> base{1.0, 2.0, 3.0, 4.0};
    Matrix sub(2, 2);
    sub(0, 0) = -1.0;
    sub(0, 1) = -2.0;
    sub(1, 0) = -3.0;
    sub(1, 1) = -4.0;
    const std::vector<int> g{1, 3};
    const auto ctx = make_context(base, g, sub);
    CHECK(ctx.consistent(g));
    CHECK(ctx.rows(0, 1) == -1.0);
    CHECK(ctx.rows(1, 3) == -4.0);
    CHECK(ctx.rows(0, 0) == 1.0);
    CHECK(ctx.rows(1, 2) == 3.0);

    auto broken = ctx;
    broken.rows(0, 0) = 99.0;
    CHECK_FALSE(broken.consistent(g));
}

TEST_CASE("a one-dimensional problem degenerates to a single plain run") {
    Objective obj = make_classical(ClassicalId::F9, 1);
    const int n = 8;
    const int iters = 20;
    const std::uint64_t inner_budget = static_cast<std::uint64_t>(n) * (iters + 1);

    CcConfig cfg = small_cc(n, iters, 20, inner_budget + n);
    Rng rc(55);
    const auto cc = run_ccgsa_dg(obj, cfg, rc);

    GsaParams p = cfg.gsa;
    Rng rg(55);
    const auto plain = run_gsa(obj, p, inner_budget, rg);

    CHECK(cc.best_fitness == plain.best_fitness); // bitwise: same stream, same arithmetic
    CHECK(cc.best_position == plain.best_position);
    CHECK(cc.evaluations_used == plain.evaluations_used + n);
    CHECK(cc.groups.groups.size() == 1);
    CHECK(cc.cycles_completed == 1);
}

TEST_CASE("one cycle on a separable sphere equals the hand-composed per-dimension runs") {
    Objective obj = make_classical(ClassicalId::F1, 3);
    CcConfig cfg = small_cc(6, 10, 1, 500);
    Rng rc(91);
    const auto cc = run_ccgsa_dg(obj, cfg, rc);

    // independent re-composition of the same loop from library pieces
    Rng rng(91);
    Evaluator ev(obj, cfg.fe_budget);
    const auto rep = group(ev, cfg.grouping);
    const int n = cfg.gsa.pop_size;
    Matrix pop(n, 3);
    for (int i = 0; i < n; ++i)
        for (int d = 0; d < 3; ++d) pop(i, d) = rng.uniform(obj.lower[d], obj.upper[d]);
    std::vector<double> fit(n);
    for (int i = 0; i < n; ++i) fit[i] = ev(pop.row(i));
    int best = 0;
    for (int i = 1; i < n; ++i)
        if (fit[i] < fit[best]) best = i;
    std::vector<double> base(pop.row(best).begin(), pop.row(best).end());

    for (const auto& g : rep.structure.groups) {
        const std::uint64_t allowance =
            std::min<std::uint64_t>(ev.remaining(), static_cast<std::uint64_t>(n) * (cfg.gsa.max_iter + 1));
        Objective sub;
        sub.name = "sub";
        sub.dim = static_cast<int>(g.size());
        for (int d : g) {
            sub.lower.push_back(obj.lower[d]);
            sub.upper.push_back(obj.upper[d]);
        }
        sub.eval = [&](std::span<const double> sx) {
            std::vector<double> full = base;
            for (std::size_t k = 0; k < g.size(); ++k) full[g[k]] = sx[k];
            return ev(full);
        };
        Matrix seed(n, g.size());
        for (int i = 0; i < n; ++i)
            for (std::size_t k = 0; k < g.size(); ++k) seed(i, k) = pop(i, g[k]);
        const auto r = run_gsa(sub, cfg.gsa, allowance, rng, nullptr, 0, &seed);
        write_back(pop, g, r.final_positions);
    }

    CHECK(cc.best_fitness == ev.best_fitness());
    CHECK(cc.best_position == ev.best_point());
    CHECK(cc.evaluations_used == ev.used());
}

TEST_CASE("every candidate evaluated for a group matches the context outside it") {
    auto obj = make_classical(ClassicalId::F9, 8);
    const int dim = obj.dim;

    std::vector<double> current_base;
    std::vector<char> in_group;
    bool inside_group = false;
    long violations = 0;

    Objective wrapped = obj;
    wrapped.eval = [&](std::span<const double> x) {
        if (inside_group) {
            for (int d = 0; d < dim; ++d)
                if (!in_group[d] && x[d] != current_base[d]) ++violations;
        }
        return obj.eval(x);
    };

    CcObserver obs;
    obs.on_cycle_begin = [&](int) { inside_group = false; };
    obs.on_cycle_best = [&](int, std::span<const double> best) {
        current_base.assign(best.begin(), best.end());
    };
    obs.on_group_begin = [&](int, int, const std::vector<int>& dims) {
        inside_group = true;
        in_group.assign(dim, 0);
        for (int d : dims) in_group[d] = 1;
    };

    CcConfig cfg = small_cc(6, 8, 3, 5000);
    Rng rng(17);
    const auto r = run_ccgsa_dg(wrapped, cfg, rng, 0, &obs);
    CHECK(violations == 0);
    CHECK(r.cycles_completed >= 1);
}

TEST_CASE("budget is a hard ceiling and results are seed-deterministic") {
    auto base_obj = make_classical(ClassicalId::F9, 6);
    std::uint64_t calls = 0;
    Objective counted = base_obj;
    counted.eval = [&](std::span<const double> x) {
        ++calls;
        return base_obj.eval(x);
    };

    CcConfig cfg = small_cc(6, 10, 4, 1800);
    Rng r1(5);
    const auto a = run_ccgsa_dg(counted, cfg, r1);
    CHECK(calls <= cfg.fe_budget);
    CHECK(a.evaluations_used == calls);

    calls = 0;
    Rng r2(5);
    const auto b = run_ccgsa_dg(counted, cfg, r2);
    CHECK(a.best_fitness == b.best_fitness);
    CHECK(a.best_position == b.best_position);
    CHECK(a.trace == b.trace);
    CHECK(a.evaluations_used == b.evaluations_used);

    REQUIRE(!a.trace.empty());
    for (std::size_t i = 1; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].second <= a.trace[i - 1].second);
        CHECK(a.trace[i].first > a.trace[i - 1].first);
    }
}

TEST_CASE("grouping starvation surfaces with the partial report attached") {
    auto obj = make_classical(ClassicalId::F1, 12);
    CcConfig cfg = small_cc(4, 5, 1, 15);
    Rng rng(1);
    CHECK_THROWS_AS(run_ccgsa_dg(obj, cfg, rng), GroupingBudgetError);
    try {
        Rng r2(1);
        run_ccgsa_dg(obj, cfg, r2);
    } catch (const GroupingBudgetError& e) {
        CHECK(e.partial.evaluations_used <= 15);
    }
}

TEST_CASE("the step-function benchmark is solved at desk scale") {
    auto obj = make_classical(ClassicalId::F6, 8);
    CcConfig cfg = small_cc(8, 30, 3, 10000);
    Rng rng(2);
    const auto r = run_ccgsa_dg(obj, cfg, rng);
    CHECK(r.best_fitness == 0.0);
    CHECK(r.groups.groups.size() == 8);
}

TEST_CASE("per-group context refresh keeps the invariants") {
    auto obj = make_classical(ClassicalId::F9, 5);
    CcConfig cfg = small_cc(6, 10, 3, 3000);
    cfg.refresh_best_per_group = true;
    Rng rng(9);
    const auto r = run_ccgsa_dg(obj, cfg, rng);
    CHECK(r.evaluations_used <= cfg.fe_budget);
    for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i].second <= r.trace[i - 1].second);
}
