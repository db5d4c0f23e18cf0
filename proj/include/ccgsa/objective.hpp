#ifndef CCGSA_OBJECTIVE_HPP
#define CCGSA_OBJECTIVE_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ccgsa/errors.hpp"

namespace ccgsa {

/// A bound-constrained minimization problem. `eval` must be pure: the same
/// input vector always yields the same fitness, and nothing outside the
/// provided span is read or written.
struct Objective {
    std::string name;
    int dim = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    std::optional<double> f_opt;
    std::optional<std::vector<double>> x_opt;
    std::function<double(std::span<const double>)> eval;

    double operator()(std::span<const double> x) const { return eval(x); }

    void validate() const {
        if (dim < 1) throw ConfigError("objective '" + name + "': dim must be >= 1");
        if (static_cast<int>(lower.size()) != dim || static_cast<int>(upper.size()) != dim)
            throw ConfigError("objective '" + name + "': bounds size mismatch");
        for (int i = 0; i < dim; ++i)
            if (!(lower[i] < upper[i]))
                throw ConfigError("objective '" + name + "': lower >= upper at dimension " +
                                  std::to_string(i));
        if (!eval) throw ConfigError("objective '" + name + "': missing eval");
    }
};

/// A partition of the dimension indices {0..dim-1} into disjoint, non-empty,
/// exhaustive blocks.
struct GroupStructure {
    std::vector<std::vector<int>> groups;

    void validate(int dim) const;

    /// Unordered-partition equality: same blocks regardless of block order
    /// or ordering of indices inside a block.
    bool same_partition(const GroupStructure& other) const;
};

/// (optimal point, optimal value) as far as the objective knows them.
inline std::pair<std::optional<std::vector<double>>, std::optional<double>>
optimum_info(const Objective& obj) {
    return {obj.x_opt, obj.f_opt};
}

} // namespace ccgsa

#endif
