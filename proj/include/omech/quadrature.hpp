// quadrature.hpp — adaptive Gauss–Kronrod integration of vector-valued
// integrands with resonance-aware initial panels.

#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "omech/errors.hpp"

namespace omech::quad {

struct Options {
    double rel_tolerance = 1e-8;
    int max_panels = 20000;
    /// Characteristic frequency bridging components of different omega-power
    /// (see `powers` in integrate).
    double scale_frequency = 1.0;
};

struct Result {
    Eigen::VectorXd value;
    Eigen::VectorXd error;
    int panels_used = 0;
};

/// Integrates f over [edges.front(), edges.back()], starting from the given
/// panel edges and bisecting the worst panel until every component's error
/// estimate is below rel_tolerance times the common scale. Components carry
/// an omega-power p (their integrand is a base quantity weighted by omega^p);
/// magnitudes are compared after dividing by scale_frequency^p, so components
/// that vanish by symmetry inherit the scale of their siblings instead of
/// demanding impossible relative accuracy. Throws ConvergenceError (carrying
/// the worst normalized residual) if max_panels is exhausted.
Result integrate(const std::function<Eigen::VectorXd(double)>& f,
                 std::vector<double> edges,
                 const std::vector<int>& powers,
                 const Options& opt);

/// Deduplicated, sorted panel edges clamped to [lo, hi]; always contains the
/// interval ends. Points outside [lo, hi] are dropped.
std::vector<double> make_edges(double lo, double hi, std::vector<double> interior);

} // namespace omech::quad
