// site.cpp — single-cavity working point and linearized dynamics

#include "omech/site.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace omech::om {

namespace {

// x / tanh(x), even, -> 1 as x -> 0. Equals x coth(x).
double xcoth(double x) {
    if (x == 0.0) return 1.0;
    const double ax = std::abs(x);
    if (ax < 1e-8) return 1.0 + x * x / 3.0;
    return x / std::tanh(x);
}

} // namespace

std::string SiteParams::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0)) {
            throw PhysicsError(std::string("site parameter must be positive: ") + name);
        }
    };
    positive(mass, "mass");
    positive(omega_m, "omega_m");
    positive(cavity_length, "cavity_length");
    positive(wavelength, "wavelength");
    positive(kappa, "kappa");
    positive(quality_factor, "quality_factor");
    positive(bath_temperature, "bath_temperature");
    positive(detuning, "detuning");
    if (pump_power < 0.0) {
        throw PhysicsError("site parameter must be nonnegative: pump_power");
    }
    if (quality_factor < 100.0) {
        return "quality factor below 100: the Markovian Brownian-noise "
               "approximation degrades in this regime";
    }
    return {};
}

DerivedQuantities derive_quantities(const SiteParams& site) {
    site.validate();
    DerivedQuantities d;
    d.omega_cavity = 2.0 * M_PI * constants::c_light / site.wavelength;
    d.chi = d.omega_cavity / site.cavity_length;
    d.gamma_m = site.omega_m / site.quality_factor;

    const double x = constants::hbar * site.omega_m /
                     (constants::k_boltzmann * site.bath_temperature);
    d.n_bar = x > 700.0 ? 0.0 : 1.0 / std::expm1(x);

    // The pump is quasi-resonant: start from omega_0 ~ omega_c, then refine
    // once with the bare detuning implied by the working point. The
    // correction is far below 1e-8 relative at typical parameters.
    double omega_pump = d.omega_cavity;
    for (int pass = 0; pass < 2; ++pass) {
        d.pump_amplitude = std::sqrt(2.0 * site.kappa * site.pump_power /
                                     (constants::hbar * omega_pump));
        d.c_ss = d.pump_amplitude / std::complex<double>(site.kappa, site.detuning);
        d.bare_detuning = site.detuning + constants::hbar * d.chi * d.chi *
                                              std::norm(d.c_ss) /
                                              (site.mass * site.omega_m * site.omega_m);
        omega_pump = d.omega_cavity - d.bare_detuning;
    }
    return d;
}

DriftMatrix drift_matrix(const SiteParams& site, const DerivedQuantities& derived) {
    const double re = derived.c_ss.real();
    const double im = derived.c_ss.imag();
    const double sqrt2 = std::sqrt(2.0);

    DriftMatrix k;
    k.mass = site.mass;
    k.omega_m = site.omega_m;
    k.k << 0.0, 1.0 / site.mass, 0.0, 0.0,
        -site.mass * site.omega_m * site.omega_m, -derived.gamma_m,
        sqrt2 * constants::hbar * derived.chi * re, sqrt2 * constants::hbar * derived.chi * im,
        -sqrt2 * derived.chi * im, 0.0, -site.kappa, site.detuning,
        sqrt2 * derived.chi * re, 0.0, -site.detuning, -site.kappa;
    return k;
}

Eigen::Matrix4d DriftMatrix::scaled() const {
    const double q_zp = std::sqrt(constants::hbar / (mass * omega_m));
    const double p_zp = std::sqrt(constants::hbar * mass * omega_m);
    Eigen::Vector4d t(1.0 / q_zp, 1.0 / p_zp, 1.0, 1.0);
    return t.asDiagonal() * k * t.cwiseInverse().asDiagonal();
}

bool stability_check(const DriftMatrix& k) {
    const Eigen::Matrix4d m = (k.mass > 0.0 && k.omega_m > 0.0) ? k.scaled() : k.k;
    Eigen::EigenSolver<Eigen::Matrix4d> es(m, /*computeEigenvectors=*/false);
    for (int i = 0; i < 4; ++i) {
        if (es.eigenvalues()[i].real() >= 0.0) return false;
    }
    return true;
}

double brownian_spectrum(double omega, const SiteParams& site) {
    const double gamma_m = site.omega_m / site.quality_factor;
    const double prefactor = constants::hbar * gamma_m * site.mass;
    const double kt = constants::k_boltzmann * site.bath_temperature;
    // omega coth(hbar omega / 2 kB T) = (2 kT / hbar) X coth X.
    const double symmetric = (2.0 * kt / constants::hbar) *
                             xcoth(constants::hbar * omega / (2.0 * kt));
    return prefactor * (symmetric + omega);
}

} // namespace omech::om
