// resource.hpp — two- and three-mode Gaussian optical resource states and
// their translation into input-noise correlator coefficients.

#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <vector>

#include "omech/gaussian.hpp"

namespace omech::resource {

// ---------------------------- two-mode states -------------------------------

/// Scalar parameterization of a (generally mixed) two-mode Gaussian state in
/// standard form: s is the mean single-mode variance scale, d the single-mode
/// asymmetry, g the global-purity parameter (purity = 1/g) and lambda in
/// [-1,1] interpolates from the least- to the most-entangled state compatible
/// with (s, d, g).
struct TwoModeParams {
    double s = 1.0;
    double d = 0.0;
    double g = 1.0;
    double lambda = 1.0;

    /// Enforces s >= 1, |d| <= s-1, 2|d|+1 <= g <= 2s-1, lambda in [-1,1].
    void validate() const;
};

/// The four independent entries of the two-mode standard form: the covariance
/// matrix is (1/2) [[a,0,c+,0],[0,a,0,c-],[c+,0,b,0],[0,c-,0,b]].
struct StandardFormEntries {
    double a = 1.0;
    double b = 1.0;
    double c_plus = 0.0;
    double c_minus = 0.0;

    gauss::CovarianceMatrix to_covariance() const;
};

/// Two-mode squeezed vacuum with single-mode variance parameter s >= 1.
gauss::CovarianceMatrix tmsv(double s);

/// TMSV parameters with s = cosh(epsilon), the inverse of the state's
/// logarithmic negativity across the 1|2 split.
TwoModeParams tmsv_from_entanglement(double epsilon);

/// Standard-form entries for the given parameters. At (d=0, g=1, lambda=1)
/// this reduces to the TMSV exactly. Throws PhysicsError when the parameter
/// ranges are violated or the resulting matrix fails the physicality check.
StandardFormEntries two_mode_standard_form(const TwoModeParams& params);

struct SampleBounds {
    double s_max = 5.0;
    /// Fraction of draws forced to d = 0, giving the symmetric sub-ensemble
    /// used by the d=0 vs d!=0 comparison statistics. 0 disables.
    double symmetric_fraction = 0.0;
};

struct SampledTwoMode {
    TwoModeParams params;
    StandardFormEntries entries;
};

/// Deterministic-by-seed batch of physical two-mode states with parameters
/// uniform over their admissible ranges, drawn in the order s, d, g, lambda
/// with each range conditioned on the previous draws. Unphysical rejections
/// are retried internally.
std::vector<SampledTwoMode> sample_two_mode_random(const SampleBounds& bounds,
                                                   std::uint64_t seed, int count);

// --------------------------- three-mode states -------------------------------

/// Local variance parameters of a pure three-mode state; physical iff the
/// triangular inequality |a_i - a_j| + 1 <= a_k <= a_i + a_j - 1 holds for
/// every permutation.
struct ThreeModeParams {
    double a1 = 1.0;
    double a2 = 1.0;
    double a3 = 1.0;

    void validate() const;
};

/// Fully symmetric pure three-mode state: diagonal a/2, cross couplings
/// x_pm = (a^2 - 1 +- sqrt(9a^4 - 10a^2 + 1)) / (8a) in the q/p sectors.
gauss::CovarianceMatrix three_mode_symmetric(double a);

/// General pure three-mode state in standard form; reduces to
/// three_mode_symmetric when a1 = a2 = a3.
gauss::CovarianceMatrix three_mode_general(const ThreeModeParams& params);

/// Residual Gaussian contangle of the symmetric pure three-mode state,
/// E = max(0, arcsinh^2 sqrt(a^2-1) - (1/2) min(0, ln(2a^2 + 4a e-))^2)
/// with e- the coupling in doubled (vacuum = identity) units. The pairwise
/// term is active only where it represents actual pairwise entanglement.
double residual_contangle_symmetric(double a);

// ---------------------------- input correlators ------------------------------

/// Noise-correlator coefficients of the optical resource driving the network.
/// Local coefficients per mode are (n_j, n_j + 1) with n_j the flux
/// occupation; cross coefficients per mode pair split into a pair-coherence
/// part (cross_minus, tagged with the -omega_m sideband phase) and a
/// beam-splitter part (cross_plus, tagged with the +omega_m phase). All
/// coefficients are in the convention where vacuum gives (0, 1) locals and
/// zero cross terms.
struct InputCorrelators {
    std::vector<double> occupation;   // n_j per mode
    Eigen::MatrixXd cross_minus;      // pair-coherence coefficients, symmetric
    Eigen::MatrixXd cross_plus;       // beam-splitter coefficients, symmetric
    double sideband_frequency = 0.0;  // rad/s

    int n_modes() const { return static_cast<int>(occupation.size()); }
    /// Two-mode accessor: (n1, n1+1, n2, n2+1).
    std::array<double, 4> local_coefficients() const;
};

/// Derives the correlator coefficients from a standard-form optical
/// covariance matrix. Throws PhysicsError if the matrix is not in standard
/// form (nonzero q-p entries or anisotropic local blocks).
InputCorrelators input_correlators(const gauss::CovarianceMatrix& optical, double omega_m);

} // namespace omech::resource
