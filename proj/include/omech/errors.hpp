// errors.hpp — exception hierarchy shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace omech {

// Bad configuration input (file syntax, unknown keys, out-of-range values).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Physics-domain violations: unphysical states, invalid parameter ranges,
// unstable dynamics.
struct PhysicsError : std::runtime_error {
    explicit PhysicsError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical non-convergence (adaptive quadrature ran out of panels, ...).
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& msg, double residual = 0.0)
        : std::runtime_error(msg), worst_residual(residual) {}
    double worst_residual;
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace omech
