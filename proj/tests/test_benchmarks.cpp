#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "ccgsa/benchmarks.hpp"
#include "ccgsa/grouping.hpp"
#include "ccgsa/rng.hpp"

using namespace ccgsa;

namespace {

// Independent 1-D oracle for the location of the Schwefel minimum: coarse
// scan over the whole interval, then golden-section refinement in the
// winning bracket.
double schwefel_1d_argmin_oracle() {
    auto f = [](double x) { return -x * std::sin(std::sqrt(std::abs(x))); };
    double best_x = -500.0, best_f = f(-500.0);
    for (double x = -500.0; x <= 500.0; x += 0.25) {
        const double v = f(x);
        if (v < best_f) {
            best_f = v;
            best_x = x;
        }
    }
    double a = best_x - 0.5, b = best_x + 0.5;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - phi * (b - a), d = a + phi * (b - a);
    while (b - a > 1e-10) {
        if (f(c) < f(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - phi * (b - a);
        d = a + phi * (b - a);
    }
    return 0.5 * (a + b);
}

std::vector<double> random_point(const Objective& obj, Rng& rng) {
    std::vector<double> x(obj.dim);
    for (int d = 0; d < obj.dim; ++d) x[d] = rng.uniform(obj.lower[d], obj.upper[d]);
    return x;
}

} // namespace

TEST_CASE("classical functions carry the published bounds and optima") {
    auto f1 = make_classical(ClassicalId::F1, 30);
    CHECK(f1.dim == 30);
    CHECK(f1.lower[0] == -100.0);
    CHECK(f1.upper[29] == 100.0);
    CHECK(f1.eval(std::vector<double>(30, 0.0)) == 0.0);

    auto f8 = make_classical(ClassicalId::F8, 10);
    CHECK(f8.lower[0] == -500.0);
    CHECK(*f8.f_opt == doctest::Approx(-4189.829).epsilon(1e-12));

    auto f9 = make_classical(ClassicalId::F9, 4);
    CHECK(f9.lower[0] == -5.12);
    auto f10 = make_classical(ClassicalId::F10, 2);
    CHECK(f10.lower[0] == -32.0);
    auto gw = make_classical(ClassicalId::Griewank, 3);
    CHECK(gw.lower[0] == -600.0);
    CHECK(gw.eval(std::vector<double>(3, 0.0)) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("step function floors before squaring") {
    auto f6 = make_classical(ClassicalId::F6, 5);
    const std::vector<double> x{0.3, -0.4, 0.1, 0.0, 0.2};
    CHECK(f6.eval(x) == 0.0);
    const std::vector<double> y{1.2, -2.7, 0.0, 0.0, 0.0};
    // floor(1.7)=1, floor(-2.2)=-3
    CHECK(f6.eval(y) == 1.0 + 9.0);
}

TEST_CASE("ackley is exactly zero at the origin by direct formula") {
    auto f10 = make_classical(ClassicalId::F10, 2);
    const double by_formula =
        -20.0 * std::exp(-0.2 * 0.0) - std::exp(1.0) + 20.0 + std::numbers::e;
    CHECK(std::abs(by_formula) < 1e-12);
    CHECK(std::abs(f10.eval(std::vector<double>(2, 0.0))) < 1e-12);
}

TEST_CASE("unknown identifiers are rejected, both aliases of Griewank accepted") {
    CHECK_THROWS_AS(make_classical("F2", 10), ConfigError);
    CHECK(make_classical("F11", 5).name == "Griewank");
    CHECK(make_classical("F13", 5).name == "Griewank");
}

TEST_CASE("stored optimum point matches the 1-D oracle and the stored value") {
    const double oracle = schwefel_1d_argmin_oracle();
    auto f8 = make_classical(ClassicalId::F8, 30);
    const auto [xopt, fopt] = optimum_info(f8);
    REQUIRE(xopt.has_value());
    REQUIRE(fopt.has_value());
    CHECK((*xopt)[0] == doctest::Approx(oracle).epsilon(1e-8));
    CHECK(*fopt == doctest::Approx(-12569.487).epsilon(1e-9));
    // Table value is a 7-digit rounding, so the match is relative 1e-6.
    CHECK(f8.eval(*xopt) == doctest::Approx(*fopt).epsilon(1e-6));
}

TEST_CASE("every classical optimum point evaluates to its optimal value") {
    for (auto id : {ClassicalId::F1, ClassicalId::F4, ClassicalId::F6, ClassicalId::F8,
                    ClassicalId::F9, ClassicalId::F10, ClassicalId::Griewank}) {
        auto obj = make_classical(id, 12);
        REQUIRE(obj.x_opt.has_value());
        const double at_opt = obj.eval(*obj.x_opt);
        if (*obj.f_opt == 0.0) {
            CHECK(std::abs(at_opt) < 1e-9);
        } else {
            CHECK(at_opt == doctest::Approx(*obj.f_opt).epsilon(1e-6));
        }
    }
}

TEST_CASE("random sampling never goes below the stored optimum") {
    Rng rng(7);
    for (auto id : {ClassicalId::F1, ClassicalId::F4, ClassicalId::F6, ClassicalId::F8,
                    ClassicalId::F9, ClassicalId::F10, ClassicalId::Griewank}) {
        auto obj = make_classical(id, 8);
        for (int k = 0; k < 200; ++k) {
            const auto x = random_point(obj, rng);
            CHECK(obj.eval(x) >= *obj.f_opt - 1e-9);
        }
    }
}

TEST_CASE("evaluation is deterministic and bit-identical") {
    auto obj = make_structured(Category::TenGroup, 60, 4, BaseKind::Rastrigin, 11).objective;
    Rng rng(3);
    for (int k = 0; k < 20; ++k) {
        const auto x = random_point(obj, rng);
        CHECK(obj.eval(x) == obj.eval(x));
    }
}

TEST_CASE("structured categories produce the advertised partitions") {
    {
        auto sp = make_structured(Category::FullySeparable, 20, 0, BaseKind::Sphere, 5);
        CHECK(sp.truth.groups.size() == 20);
        for (const auto& g : sp.truth.groups) CHECK(g.size() == 1);
        sp.truth.validate(20);
    }
    {
        auto sp = make_structured(Category::TenGroup, 1000, 50, BaseKind::Rosenbrock, 5);
        REQUIRE(sp.truth.groups.size() == 10 + 500);
        int blocks = 0, singles = 0;
        for (const auto& g : sp.truth.groups) {
            if (g.size() == 50)
                ++blocks;
            else if (g.size() == 1)
                ++singles;
        }
        CHECK(blocks == 10);
        CHECK(singles == 500);
        sp.truth.validate(1000);
    }
    {
        auto sp = make_structured(Category::FullyNonseparable, 40, 40, BaseKind::SchwefelDoubleSum, 5);
        REQUIRE(sp.truth.groups.size() == 1);
        CHECK(sp.truth.groups[0].size() == 40);
    }
    {
        auto sp = make_structured(Category::SingleGroup, 30, 6, BaseKind::Rastrigin, 5);
        CHECK(sp.truth.groups.size() == 1 + 24);
        CHECK(sp.truth.groups[0].size() == 6);
    }
    {
        auto sp = make_structured(Category::TwentyGroup, 40, 2, BaseKind::SchwefelDoubleSum, 5);
        CHECK(sp.truth.groups.size() == 20);
        for (const auto& g : sp.truth.groups) CHECK(g.size() == 2);
    }
}

TEST_CASE("incompatible structured shapes are rejected") {
    CHECK_THROWS_AS(make_structured(Category::TenGroup, 30, 5, BaseKind::Sphere, 1), ConfigError);
    CHECK_THROWS_AS(make_structured(Category::TwentyGroup, 50, 2, BaseKind::Sphere, 1), ConfigError);
}

TEST_CASE("structured optimum point is in bounds and evaluates to zero") {
    for (auto base : {BaseKind::Rastrigin, BaseKind::Ackley, BaseKind::SchwefelDoubleSum,
                      BaseKind::Rosenbrock, BaseKind::Sphere}) {
        auto sp = make_structured(Category::SingleGroup, 25, 5, base, 99);
        const auto& obj = sp.objective;
        REQUIRE(obj.x_opt.has_value());
        for (int d = 0; d < obj.dim; ++d) {
            CHECK((*obj.x_opt)[d] >= obj.lower[d]);
            CHECK((*obj.x_opt)[d] <= obj.upper[d]);
        }
        CHECK(std::abs(obj.eval(*obj.x_opt)) < 1e-9);

        Rng rng(5);
        for (int k = 0; k < 100; ++k)
            CHECK(obj.eval(random_point(obj, rng)) >= -1e-9);
    }
}

TEST_CASE("construction is deterministic in the seed") {
    auto a = make_structured(Category::TenGroup, 80, 5, BaseKind::Rosenbrock, 123);
    auto b = make_structured(Category::TenGroup, 80, 5, BaseKind::Rosenbrock, 123);
    CHECK(a.permutation == b.permutation);
    CHECK(a.shift == b.shift);
    CHECK(a.truth.same_partition(b.truth));
    Rng rng(1);
    const auto x = random_point(a.objective, rng);
    CHECK(a.objective.eval(x) == b.objective.eval(x));
}

TEST_CASE("interaction measure separates truth blocks from cross-block pairs") {
    // Pairs in different truth blocks must fall below the detection
    // threshold; coupled pairs inside a block must exceed it. Rosenbrock
    // chains couple adjacent block-local variables, the other bases couple
    // every pair, so the within-block check samples accordingly.
    GroupingConfig cfg;
    for (auto base : {BaseKind::SchwefelDoubleSum, BaseKind::Rastrigin}) {
        auto sp = make_structured(Category::TenGroup, 40, 3, base, 17);
        EvalCounter counter;
        const auto& blocks = sp.truth.groups;
        // two dims from different blocks
        CHECK_FALSE(detect_interaction(sp.objective, blocks[0][0], blocks[1][0], cfg, counter));
        CHECK_FALSE(detect_interaction(sp.objective, blocks[0][2], blocks[9][1], cfg, counter));
        // all pairs within one block
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                CHECK(detect_interaction(sp.objective, blocks[2][a], blocks[2][b], cfg, counter));
    }
    {
        auto sp = make_structured(Category::SingleGroup, 30, 8, BaseKind::Rosenbrock, 21);
        EvalCounter counter;
        // block-local order follows the permutation, not the sorted indices
        std::vector<int> local(sp.permutation.begin(), sp.permutation.begin() + 8);
        for (int k = 0; k + 1 < 8; ++k)
            CHECK(detect_interaction(sp.objective, local[k], local[k + 1], cfg, counter));
        CHECK_FALSE(detect_interaction(sp.objective, sp.permutation[8], sp.permutation[9], cfg, counter));
    }
}
