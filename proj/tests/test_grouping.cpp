#include <doctest.h>

#include <cmath>

#include "ccgsa/benchmarks.hpp"
#include "ccgsa/grouping.hpp"
#include "ccgsa/rng.hpp"

using namespace ccgsa;

namespace {

Objective product_2d() {
    Objective o;
    o.name = "xy";
    o.dim = 2;
    o.lower = {-1.0, -1.0};
    o.upper = {1.0, 1.0};
    o.eval = [](std::span<const double> x) { return x[0] * x[1]; };
    return o;
}

Objective rosenbrock_chain(int dim) {
    Objective o;
    o.name = "rosenbrock-chain";
    o.dim = dim;
    o.lower.assign(dim, -5.0);
    o.upper.assign(dim, 10.0);
    o.eval = [](std::span<const double> x) {
        double s = 0.0;
        for (std::size_t k = 0; k + 1 < x.size(); ++k) {
            const double a = x[k + 1] - x[k] * x[k];
            const double b = 1.0 - x[k];
            s += 100.0 * a * a + b * b;
        }
        return s;
    };
    return o;
}

Objective squared_sum(int dim) {
    Objective o;
    o.name = "squared-sum";
    o.dim = dim;
    o.lower.assign(dim, -100.0);
    o.upper.assign(dim, 100.0);
    o.eval = [](std::span<const double> x) {
        double s = 0.0;
        for (double v : x) s += v;
        return s * s;
    };
    return o;
}

GroupStructure singletons(int dim) {
    GroupStructure gs;
    for (int d = 0; d < dim; ++d) gs.groups.push_back({d});
    return gs;
}

} // namespace

TEST_CASE("separable pairs are not flagged, coupled pairs are") {
    GroupingConfig cfg;
    EvalCounter counter;

    auto sphere = make_classical(ClassicalId::F1, 6);
    CHECK_FALSE(detect_interaction(sphere, 0, 1, cfg, counter));
    CHECK_FALSE(detect_interaction(sphere, 2, 5, cfg, counter));

    auto xy = product_2d();
    counter.count = 0;
    CHECK(detect_interaction(xy, 0, 1, cfg, counter));
    CHECK(counter.count == 4); // exactly four probe evaluations

    auto chain = rosenbrock_chain(3);
    CHECK(detect_interaction(chain, 0, 1, cfg, counter));
    CHECK_FALSE(detect_interaction(chain, 0, 2, cfg, counter));
    CHECK(detect_interaction(chain, 1, 2, cfg, counter));
}

TEST_CASE("probe arguments are validated") {
    GroupingConfig cfg;
    EvalCounter counter;
    auto sphere = make_classical(ClassicalId::F1, 4);
    CHECK_THROWS_AS(detect_interaction(sphere, 1, 1, cfg, counter), ConfigError);
    CHECK_THROWS_AS(detect_interaction(sphere, 0, 4, cfg, counter), ConfigError);
    GroupingConfig bad;
    bad.epsilon_dg = 0.0;
    CHECK_THROWS_AS(detect_interaction(sphere, 0, 1, bad, counter), ConfigError);
}

TEST_CASE("fully separable functions decompose into singletons") {
    GroupingConfig cfg;
    auto sphere = make_classical(ClassicalId::F1, 10);
    const auto rep = group(sphere, cfg);
    CHECK(rep.structure.same_partition(singletons(10)));
    CHECK(rep.structure.groups.size() == 10);
    rep.structure.validate(10);
    CHECK(rep.evaluations_used >= rep.pairwise_checks);
}

TEST_CASE("a globally coupled function collapses into one block") {
    GroupingConfig cfg;
    const auto rep = group(squared_sum(8), cfg);
    REQUIRE(rep.structure.groups.size() == 1);
    CHECK(rep.structure.groups[0].size() == 8);
}

TEST_CASE("chained interactions close transitively") {
    GroupingConfig cfg;
    const auto rep = group(rosenbrock_chain(6), cfg);
    REQUIRE(rep.structure.groups.size() == 1);
    CHECK(rep.structure.groups[0].size() == 6);
}

TEST_CASE("recovered partition equals ground truth on structured problems") {
    GroupingConfig cfg;
    {
        auto sp = make_structured(Category::TenGroup, 100, 5, BaseKind::SchwefelDoubleSum, 31);
        const auto rep = group(sp.objective, cfg);
        CHECK(rep.structure.same_partition(sp.truth));
        CHECK(rep.structure.groups.size() == 10 + 50);
    }
    {
        auto sp = make_structured(Category::SingleGroup, 60, 10, BaseKind::Rastrigin, 32);
        CHECK(group(sp.objective, cfg).structure.same_partition(sp.truth));
    }
    {
        auto sp = make_structured(Category::TwentyGroup, 80, 4, BaseKind::Rosenbrock, 33);
        CHECK(group(sp.objective, cfg).structure.same_partition(sp.truth));
    }
    {
        auto sp = make_structured(Category::FullyNonseparable, 40, 40, BaseKind::SchwefelDoubleSum, 34);
        CHECK(group(sp.objective, cfg).structure.same_partition(sp.truth));
    }
    {
        auto sp = make_structured(Category::FullySeparable, 50, 0, BaseKind::Sphere, 35);
        CHECK(group(sp.objective, cfg).structure.same_partition(sp.truth));
    }
}

TEST_CASE("random separable polynomial sums always come out as singletons") {
    GroupingConfig cfg;
    Rng rng(101);
    for (int trial = 0; trial < 25; ++trial) {
        const int dim = 2 + static_cast<int>(rng.integer(12));
        std::vector<double> a(dim), b(dim), c(dim);
        for (int d = 0; d < dim; ++d) {
            a[d] = rng.uniform(-2.0, 2.0);
            b[d] = rng.uniform(-2.0, 2.0);
            c[d] = rng.uniform(-2.0, 2.0);
        }
        Objective o;
        o.name = "poly";
        o.dim = dim;
        o.lower.assign(dim, -5.0);
        o.upper.assign(dim, 5.0);
        o.eval = [a, b, c](std::span<const double> x) {
            double s = 0.0;
            for (std::size_t d = 0; d < x.size(); ++d)
                s += a[d] * x[d] * x[d] + b[d] * x[d] + c[d];
            return s;
        };
        CHECK(group(o, cfg).structure.same_partition(singletons(dim)));
    }
}

TEST_CASE("interaction detection is symmetric across the benchmark suite") {
    GroupingConfig cfg;
    EvalCounter counter;
    for (auto id : {ClassicalId::F1, ClassicalId::F4, ClassicalId::F6, ClassicalId::F8,
                    ClassicalId::F9, ClassicalId::F10, ClassicalId::Griewank}) {
        auto obj = make_classical(id, 6);
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                CHECK(detect_interaction(obj, i, j, cfg, counter) ==
                      detect_interaction(obj, j, i, cfg, counter));
    }
    auto sp = make_structured(Category::SingleGroup, 12, 4, BaseKind::SchwefelDoubleSum, 8);
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j)
            CHECK(detect_interaction(sp.objective, i, j, cfg, counter) ==
                  detect_interaction(sp.objective, j, i, cfg, counter));
}

TEST_CASE("the sweep's evaluation count matches the evaluator exactly") {
    GroupingConfig cfg;
    auto sp = make_structured(Category::TenGroup, 40, 3, BaseKind::SchwefelDoubleSum, 13);
    Evaluator ev(sp.objective, 1'000'000);
    const auto rep = group(ev, cfg);
    CHECK(rep.evaluations_used == ev.used());
    CHECK(rep.structure.same_partition(sp.truth));
}

TEST_CASE("budget starvation mid-sweep reports the partial structure") {
    GroupingConfig cfg;
    auto sphere = make_classical(ClassicalId::F1, 12);
    Evaluator ev(sphere, 20);
    bool thrown = false;
    try {
        group(ev, cfg);
    } catch (const GroupingBudgetError& e) {
        thrown = true;
        CHECK(e.partial.evaluations_used <= 20);
        CHECK(e.partial.structure.groups.size() < 12);
    }
    CHECK(thrown);
    CHECK(ev.used() == 20);
}
