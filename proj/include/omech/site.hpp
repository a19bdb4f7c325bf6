// site.hpp — one optomechanical cavity: physical constants, derived
// steady-state quantities, linearized drift matrix and bath spectrum.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

#include "omech/errors.hpp"

namespace omech::om {

namespace constants {
constexpr double hbar = 1.054571817e-34;       // J s
constexpr double k_boltzmann = 1.380649e-23;   // J / K
constexpr double c_light = 299792458.0;        // m / s
constexpr double two_pi = 6.283185307179586;
} // namespace constants

/// Physical constants of a single driven Fabry–Perot cavity with a movable
/// end mirror, plus its bath temperature and effective detuning working point.
struct SiteParams {
    double mass = 1.45e-10;                          // kg
    double omega_m = constants::two_pi * 947e3;      // rad/s
    double cavity_length = 25e-3;                    // m
    double pump_power = 20e-3;                       // W (0 switches the drive off)
    double wavelength = 1064e-9;                     // m
    double kappa = constants::two_pi * 215e3;        // rad/s
    double quality_factor = 7000.0;
    double bath_temperature = 1e-6;                  // K
    double detuning = constants::two_pi * 947e3;     // rad/s, effective

    /// Throws PhysicsError on nonpositive quantities (pump_power may be 0).
    /// Returns a warning string for parameter regimes where the model
    /// degrades (quality factor below 100), empty otherwise.
    std::string validate() const;
};

/// Quantities derived from SiteParams at the chosen working point.
struct DerivedQuantities {
    double omega_cavity = 0.0;       // rad/s
    double chi = 0.0;                // (rad/s)/m, radiation-pressure rate
    double pump_amplitude = 0.0;     // s^-1
    std::complex<double> c_ss;       // dimensionless intracavity amplitude
    double gamma_m = 0.0;            // rad/s
    double n_bar = 0.0;              // mean phonon occupation
    double bare_detuning = 0.0;      // rad/s, cavity-pump detuning delta
};

DerivedQuantities derive_quantities(const SiteParams& site);

/// Linearized drift matrix in the dimensionful basis (q, p, x, y), together
/// with the scales needed to express it in dimensionless quadratures.
struct DriftMatrix {
    Eigen::Matrix4d k = Eigen::Matrix4d::Zero();
    double mass = 0.0;
    double omega_m = 0.0;

    /// Similarity-transformed drift with q, p in zero-point units. Same
    /// spectrum, vastly better conditioning for eigenvalue work.
    Eigen::Matrix4d scaled() const;
};

DriftMatrix drift_matrix(const SiteParams& site, const DerivedQuantities& derived);

/// True iff every eigenvalue of the drift matrix has a strictly negative
/// real part (the steady state exists).
bool stability_check(const DriftMatrix& k);

/// Symmetrized spectral density of the Brownian Langevin force,
/// hbar gamma_m m omega [coth(hbar omega / 2 kB T) + 1]; the omega -> 0
/// limit is 2 gamma_m m kB T.
double brownian_spectrum(double omega, const SiteParams& site);

} // namespace omech::om
