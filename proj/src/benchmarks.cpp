#include "ccgsa/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "ccgsa/rng.hpp"

namespace ccgsa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Location of the one-dimensional minimum of -x*sin(sqrt(|x|)) on [-500, 500],
// pinned once from a numerical root of the derivative (see test oracle).
constexpr double kSchwefelArgmin = 420.968746359982027;

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double max_abs(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

double step_fn(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) {
        const double t = std::floor(v + 0.5);
        s += t * t;
    }
    return s;
}

double schwefel(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += -v * std::sin(std::sqrt(std::abs(v)));
    return s;
}

double rastrigin(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v - 10.0 * std::cos(kTwoPi * v) + 10.0;
    return s;
}

double ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(kTwoPi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double griewank(std::span<const double> x) {
    double s = 0.0, p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i];
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s / 4000.0 - p + 1.0;
}

Objective classical_base(const std::string& name, int dim, double lo, double hi) {
    Objective o;
    o.name = name;
    o.dim = dim;
    o.lower.assign(dim, lo);
    o.upper.assign(dim, hi);
    return o;
}

} // namespace

ClassicalId classical_from_string(const std::string& id) {
    if (id == "F1" || id == "f1") return ClassicalId::F1;
    if (id == "F4" || id == "f4") return ClassicalId::F4;
    if (id == "F6" || id == "f6") return ClassicalId::F6;
    if (id == "F8" || id == "f8") return ClassicalId::F8;
    if (id == "F9" || id == "f9") return ClassicalId::F9;
    if (id == "F10" || id == "f10") return ClassicalId::F10;
    // Both labels are used for the same function in published tables.
    if (id == "Griewank" || id == "griewank" || id == "F11" || id == "f11" || id == "F13" ||
        id == "f13")
        return ClassicalId::Griewank;
    throw ConfigError("unknown function identifier '" + id + "'");
}

std::string to_string(ClassicalId id) {
    switch (id) {
        case ClassicalId::F1: return "F1";
        case ClassicalId::F4: return "F4";
        case ClassicalId::F6: return "F6";
        case ClassicalId::F8: return "F8";
        case ClassicalId::F9: return "F9";
        case ClassicalId::F10: return "F10";
        case ClassicalId::Griewank: return "Griewank";
    }
    return "?";
}

Objective make_classical(ClassicalId id, int dim) {
    if (dim < 1) throw ConfigError("make_classical: dim must be >= 1");
    const auto zeros = std::vector<double>(dim, 0.0);
    Objective o;
    switch (id) {
        case ClassicalId::F1:
            o = classical_base("F1", dim, -100.0, 100.0);
            o.f_opt = 0.0;
            o.x_opt = zeros;
            o.eval = sphere;
            break;
        case ClassicalId::F4:
            o = classical_base("F4", dim, -100.0, 100.0);
            o.f_opt = 0.0;
            o.x_opt = zeros;
            o.eval = max_abs;
            break;
        case ClassicalId::F6:
            o = classical_base("F6", dim, -100.0, 100.0);
            o.f_opt = 0.0;
            o.x_opt = zeros;
            o.eval = step_fn;
            break;
        case ClassicalId::F8:
            o = classical_base("F8", dim, -500.0, 500.0);
            o.f_opt = -418.9829 * dim;
            o.x_opt = std::vector<double>(dim, kSchwefelArgmin);
            o.eval = schwefel;
            break;
        case ClassicalId::F9:
            o = classical_base("F9", dim, -5.12, 5.12);
            o.f_opt = 0.0;
            o.x_opt = zeros;
            o.eval = rastrigin;
            break;
        case ClassicalId::F10:
            o = classical_base("F10", dim, -32.0, 32.0);
            o.f_opt = 0.0;
            o.x_opt = zeros;
            o.eval = ackley;
            break;
        case ClassicalId::Griewank:
            o = classical_base("Griewank", dim, -600.0, 600.0);
            o.f_opt = 0.0;
            o.x_opt = zeros;
            o.eval = griewank;
            break;
    }
    o.validate();
    return o;
}

Objective make_classical(const std::string& id, int dim) {
    return make_classical(classical_from_string(id), dim);
}

Category category_from_string(const std::string& s) {
    if (s == "fully-separable") return Category::FullySeparable;
    if (s == "single-group") return Category::SingleGroup;
    if (s == "ten-group") return Category::TenGroup;
    if (s == "twenty-group") return Category::TwentyGroup;
    if (s == "fully-nonseparable") return Category::FullyNonseparable;
    throw ConfigError("unknown category '" + s + "'");
}

std::string to_string(Category c) {
    switch (c) {
        case Category::FullySeparable: return "fully-separable";
        case Category::SingleGroup: return "single-group";
        case Category::TenGroup: return "ten-group";
        case Category::TwentyGroup: return "twenty-group";
        case Category::FullyNonseparable: return "fully-nonseparable";
    }
    return "?";
}

BaseKind base_from_string(const std::string& s) {
    if (s == "rastrigin") return BaseKind::Rastrigin;
    if (s == "ackley") return BaseKind::Ackley;
    if (s == "schwefel-1.2") return BaseKind::SchwefelDoubleSum;
    if (s == "rosenbrock") return BaseKind::Rosenbrock;
    if (s == "sphere") return BaseKind::Sphere;
    throw ConfigError("unknown base function '" + s + "'");
}

std::string to_string(BaseKind b) {
    switch (b) {
        case BaseKind::Rastrigin: return "rastrigin";
        case BaseKind::Ackley: return "ackley";
        case BaseKind::SchwefelDoubleSum: return "schwefel-1.2";
        case BaseKind::Rosenbrock: return "rosenbrock";
        case BaseKind::Sphere: return "sphere";
    }
    return "?";
}

namespace {

std::pair<double, double> base_bounds(BaseKind b) {
    switch (b) {
        case BaseKind::Rastrigin: return {-5.12, 5.12};
        case BaseKind::Ackley: return {-32.0, 32.0};
        case BaseKind::SchwefelDoubleSum: return {-100.0, 100.0};
        case BaseKind::Rosenbrock: return {-30.0, 30.0};
        case BaseKind::Sphere: return {-100.0, 100.0};
    }
    return {-100.0, 100.0};
}

int block_count(Category c) {
    switch (c) {
        case Category::FullySeparable: return 0;
        case Category::SingleGroup: return 1;
        case Category::TenGroup: return 10;
        case Category::TwentyGroup: return 20;
        case Category::FullyNonseparable: return 1;
    }
    return 0;
}

// Evaluates one nonseparable block on its shifted local variables z.
// Prefix sums couple every variable of the block for the non-chain bases.
double block_eval(BaseKind kind, std::span<const double> z, std::vector<double>& ybuf) {
    if (kind == BaseKind::Rosenbrock) {
        double s = 0.0;
        for (std::size_t k = 0; k + 1 < z.size(); ++k) {
            const double a = z[k + 1] - z[k] * z[k];
            const double b = 1.0 - z[k];
            s += 100.0 * a * a + b * b;
        }
        return s;
    }
    ybuf.resize(z.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) {
        acc += z[k];
        ybuf[k] = acc;
    }
    switch (kind) {
        case BaseKind::Sphere:
        case BaseKind::SchwefelDoubleSum: return sphere(ybuf);
        case BaseKind::Rastrigin: return rastrigin(ybuf);
        case BaseKind::Ackley: return ackley(ybuf);
        default: return 0.0;
    }
}

double tail_eval(BaseKind kind, double z) {
    if (kind == BaseKind::Rastrigin) return z * z - 10.0 * std::cos(kTwoPi * z) + 10.0;
    return z * z;
}

} // namespace

StructuredProblem make_structured(Category category, int dim, int group_size,
                                  BaseKind base, std::uint64_t seed) {
    if (dim < 1) throw ConfigError("make_structured: dim must be >= 1");
    const int blocks = block_count(category);
    int gs = group_size;
    if (category == Category::FullyNonseparable) gs = dim;
    if (category == Category::FullySeparable) gs = 0;
    if (blocks > 0 && gs < 1) throw ConfigError("make_structured: group_size must be >= 1");
    if (blocks > 0 && gs < 2 && category != Category::FullyNonseparable)
        throw ConfigError("make_structured: nonseparable blocks need group_size >= 2");
    if (blocks * gs > dim)
        throw ConfigError("make_structured: block count * group_size exceeds dim");
    if (category == Category::TwentyGroup && blocks * gs != dim)
        throw ConfigError("make_structured: twenty-group requires 20 * group_size == dim");

    const auto [lo, hi] = base_bounds(base);
    Rng rng(seed);

    std::vector<int> perm(dim);
    for (int i = 0; i < dim; ++i) perm[i] = i;
    for (int i = dim - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.integer(static_cast<std::uint64_t>(i) + 1)]);

    // Shift stays away from the walls so the shifted optimum (shift, or
    // shift+1 on rosenbrock block dims) is strictly inside the bounds.
    const double margin = 0.1 * (hi - lo);
    std::vector<double> shift(dim);
    for (int i = 0; i < dim; ++i) shift[i] = rng.uniform(lo + margin, hi - margin);

    std::vector<std::vector<int>> block_dims(blocks);
    for (int b = 0; b < blocks; ++b) {
        block_dims[b].assign(perm.begin() + b * gs, perm.begin() + (b + 1) * gs);
    }
    std::vector<int> tail_dims(perm.begin() + blocks * gs, perm.end());

    StructuredProblem sp;
    sp.category = category;
    sp.permutation = perm;
    sp.shift = shift;
    for (auto& bd : block_dims) {
        auto sorted = bd;
        std::sort(sorted.begin(), sorted.end());
        sp.truth.groups.push_back(std::move(sorted));
    }
    {
        auto sorted_tail = tail_dims;
        std::sort(sorted_tail.begin(), sorted_tail.end());
        for (int d : sorted_tail) sp.truth.groups.push_back({d});
    }

    Objective o;
    o.name = "structured-" + to_string(category) + "-" + to_string(base) + "-d" +
             std::to_string(dim) + (blocks > 0 ? "-g" + std::to_string(gs) : "") + "-s" +
             std::to_string(seed);
    o.dim = dim;
    o.lower.assign(dim, lo);
    o.upper.assign(dim, hi);
    o.f_opt = 0.0;
    {
        std::vector<double> xopt = shift;
        if (base == BaseKind::Rosenbrock)
            for (const auto& bd : block_dims)
                for (int d : bd) xopt[d] += 1.0;
        o.x_opt = std::move(xopt);
    }
    o.eval = [base, block_dims, tail_dims, shift](std::span<const double> x) {
        thread_local std::vector<double> zbuf, ybuf;
        double f = 0.0;
        for (const auto& bd : block_dims) {
            zbuf.resize(bd.size());
            for (std::size_t k = 0; k < bd.size(); ++k) zbuf[k] = x[bd[k]] - shift[bd[k]];
            f += block_eval(base, zbuf, ybuf);
        }
        for (int d : tail_dims) f += tail_eval(base, x[d] - shift[d]);
        return f;
    };
    o.validate();
    sp.objective = std::move(o);
    return sp;
}

} // namespace ccgsa
