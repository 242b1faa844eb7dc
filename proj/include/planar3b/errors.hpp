#pragma once

#include <stdexcept>
#include <string>

namespace planar3b {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A transcendental condition has no real solution in the searched window.
class NoRealRoot : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative solver or quadrature failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent run configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace planar3b
