// dynamics.hpp — frequency-domain solution of the linearized Langevin
// equations and the stationary mechanical covariance matrix of the network.

#pragma once

#include <complex>
#include <vector>

#include "omech/gaussian.hpp"
#include "omech/quadrature.hpp"
#include "omech/resource.hpp"
#include "omech/site.hpp"

namespace omech::om {

/// Frequency window and convergence policy for the steady-state integrals.
struct SpectralConfig {
    double omega_window = 8.0;   // half-width of the window, in units of omega_m
    double rel_tolerance = 1e-8;
    int max_panels = 20000;

    /// The window must cover the mechanical and cavity resonances.
    void validate(const SiteParams& site) const;
};

/// Coefficients multiplying the input-mode operators deltaC, deltaC^dag and
/// the Brownian force in the closed-form frequency-domain solutions for the
/// mechanical position (q_*) and momentum (p_* = -i omega m q_*).
struct TransferCoefficients {
    std::complex<double> q_in;       // multiplies deltaC(omega)
    std::complex<double> q_in_dag;   // multiplies deltaC^dag(omega)
    std::complex<double> q_brown;    // multiplies the Brownian force
    std::complex<double> p_in;
    std::complex<double> p_in_dag;
    std::complex<double> p_brown;
    std::complex<double> denominator;
};

/// Evaluates the transfer coefficients at frequency omega. Throws
/// PhysicsError if the common denominator vanishes within tolerance
/// (marginally stable working point).
TransferCoefficients transfer_coefficients(double omega, const SiteParams& site,
                                           const DerivedQuantities& derived);

/// Stationary symmetrized covariance matrix of the N mechanical oscillators,
/// in dimensionless quadratures (vacuum = 1/2). Local entries come from the
/// white local noise and the Brownian force; cross-site entries from the
/// resource's pair coherences (spectrally located at the +-omega_m sidebands
/// of the drive) and beam-splitter coherences (windowed onto the upper
/// sideband). Throws PhysicsError for unstable sites or mismatched inputs and
/// ConvergenceError if the quadrature does not converge.
gauss::CovarianceMatrix steady_state_mech_covariance(
    const gauss::CovarianceMatrix& optical,
    const resource::InputCorrelators& correlators,
    const std::vector<SiteParams>& sites,
    const SpectralConfig& cfg);

} // namespace omech::om
