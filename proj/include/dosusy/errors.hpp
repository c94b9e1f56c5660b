#pragma once

#include <stdexcept>
#include <string>

namespace dosusy {

// Argument outside the mathematical domain of an evaluator (rho <= 0,
// negative degree, invalid quantum numbers, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An iterative oracle (quadrature, differentiation, root bracketing) could not
// meet its tolerance within its budget.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Numerov march blew up; the seeded branch is not normalizable.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Sampling grid rejected (too short, not increasing, too coarse, non-uniform).
class GridError : public std::invalid_argument {
public:
    explicit GridError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace dosusy
