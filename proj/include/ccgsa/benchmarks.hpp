#ifndef CCGSA_BENCHMARKS_HPP
#define CCGSA_BENCHMARKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ccgsa/objective.hpp"

namespace ccgsa {

/// Classical scalable test functions. Griewank also answers to the labels
/// F11 and F13, which both appear in the literature for the same function.
enum class ClassicalId { F1, F4, F6, F8, F9, F10, Griewank };

ClassicalId classical_from_string(const std::string& id);
std::string to_string(ClassicalId id);

Objective make_classical(ClassicalId id, int dim);
Objective make_classical(const std::string& id, int dim);

/// Separability layout of a constructed problem.
enum class Category { FullySeparable, SingleGroup, TenGroup, TwentyGroup, FullyNonseparable };

Category category_from_string(const std::string& s);
std::string to_string(Category c);

/// Function family used inside nonseparable blocks and, where it makes
/// sense, for the separable tail.
enum class BaseKind { Rastrigin, Ackley, SchwefelDoubleSum, Rosenbrock, Sphere };

BaseKind base_from_string(const std::string& s);
std::string to_string(BaseKind b);

/// A shifted, permuted composite with known interaction structure. `truth`
/// is the real partition the construction induces, exposed so grouping can
/// be tested against ground truth.
struct StructuredProblem {
    Objective objective;
    GroupStructure truth;
    Category category = Category::FullySeparable;
    std::vector<int> permutation;
    std::vector<double> shift;
};

/// Builds a structured problem:
///   - `category` fixes the number of nonseparable blocks (0, 1, 10, 20, or
///     one block covering everything);
///   - blocks of `group_size` variables are coupled either by a Rosenbrock
///     chain or by applying the base function to prefix sums (the
///     Schwefel-1.2 double-sum pattern), both of which make every block
///     variable interact with the block;
///   - leftover indices form a separable tail (rastrigin tail for a
///     rastrigin base, sphere tail otherwise);
///   - variables are scattered through a seeded random permutation and the
///     optimum is moved by a seeded random shift.
/// Construction is deterministic in `seed`.
StructuredProblem make_structured(Category category, int dim, int group_size,
                                  BaseKind base, std::uint64_t seed);

} // namespace ccgsa

#endif
