#ifndef CCGSA_ERRORS_HPP
#define CCGSA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ccgsa {

// Bad parameters, shapes, identifiers, or config files.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite values fed into or produced by numeric kernels.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem problems in the experiment runner.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by Evaluator when a caller tries to evaluate past its budget.
struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ccgsa

#endif
