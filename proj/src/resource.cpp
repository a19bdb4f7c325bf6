// resource.cpp — constructors and samplers for the optical resource states

#include "omech/resource.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace omech::resource {

namespace {

constexpr double kStandardFormTol = 1e-9;

double uniform01(std::mt19937_64& rng) {
    // 53-bit mantissa draw, stable across platforms.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

// ---------------------------- two-mode states -------------------------------

void TwoModeParams::validate() const {
    if (!(s >= 1.0)) {
        throw PhysicsError("two-mode params: s must be >= 1");
    }
    if (!(std::abs(d) <= s - 1.0 + 1e-12)) {
        throw PhysicsError("two-mode params: |d| must be <= s - 1");
    }
    if (!(2.0 * std::abs(d) + 1.0 <= g + 1e-12) || !(g <= 2.0 * s - 1.0 + 1e-12)) {
        throw PhysicsError("two-mode params: g must lie in [2|d|+1, 2s-1]");
    }
    if (!(lambda >= -1.0 - 1e-12 && lambda <= 1.0 + 1e-12)) {
        throw PhysicsError("two-mode params: lambda must lie in [-1, 1]");
    }
}

gauss::CovarianceMatrix StandardFormEntries::to_covariance() const {
    Eigen::MatrixXd m(4, 4);
    m << a, 0, c_plus, 0,
         0, a, 0, c_minus,
         c_plus, 0, b, 0,
         0, c_minus, 0, b;
    return gauss::CovarianceMatrix(2, 0.5 * m);
}

gauss::CovarianceMatrix tmsv(double s) {
    if (!(s >= 1.0)) throw PhysicsError("tmsv: s must be >= 1");
    const double c = std::sqrt(s * s - 1.0);
    StandardFormEntries e{s, s, c, -c};
    return e.to_covariance();
}

TwoModeParams tmsv_from_entanglement(double epsilon) {
    if (epsilon < 0.0) throw PhysicsError("tmsv_from_entanglement: epsilon must be >= 0");
    return TwoModeParams{std::cosh(epsilon), 0.0, 1.0, 1.0};
}

StandardFormEntries two_mode_standard_form(const TwoModeParams& p) {
    p.validate();
    const double s = p.s, d = p.d, g = p.g;
    const double ab = s * s - d * d;

    StandardFormEntries e;
    e.a = s + d;
    e.b = s - d;

    if (p.lambda >= 1.0 - 1e-12 || g <= 1.0 + 1e-12) {
        // Most-entangled member at these marginals and purity: a nonsymmetric
        // squeezed thermal state, c+- = +-sqrt(s^2 - d^2 - g). At g = 1 the
        // family collapses onto this branch (pure => TMSV) for any lambda.
        const double c = std::sqrt(std::max(0.0, ab - g));
        e.c_plus = c;
        e.c_minus = -c;
    } else {
        // The family interpolates affinely, in the cross-correlation product
        // pi = c+ c-, between the least-entangled state compatible with the
        // marginals and global purity (one symplectic eigenvalue pinned at
        // the vacuum) at lambda = -1, and the squeezed thermal branch at
        // lambda = +1. det sigma = g^2 (purity 1/g) holds identically along
        // the path. Computing the sum u = c+ + c- and difference v = c+ - c-
        // through the factorized radicands keeps the construction stable
        // where the discriminant degenerates.
        const double pi_min_ent = 0.5 * (1.0 + g * g) - s * s - d * d;
        const double pi_max_ent = d * d + g - s * s;
        const double pi = pi_min_ent + 0.5 * (1.0 + p.lambda) * (pi_max_ent - pi_min_ent);

        const double u2 = std::max(0.0, (ab + pi - g) * (ab + pi + g) / ab);
        const double v2 = std::max(0.0, (ab - pi - g) * (ab - pi + g) / ab);
        const double u = std::sqrt(u2);
        const double v = std::sqrt(v2);
        e.c_plus = 0.5 * (u + v);
        e.c_minus = 0.5 * (u - v);
    }

    if (!gauss::is_physical(e.to_covariance())) {
        throw PhysicsError("parameterization outside physical branch");
    }
    return e;
}

std::vector<SampledTwoMode> sample_two_mode_random(const SampleBounds& bounds,
                                                   std::uint64_t seed, int count) {
    if (count < 0) throw PhysicsError("sample_two_mode_random: count must be >= 0");
    if (count > 0 && !(bounds.s_max > 1.0)) {
        throw PhysicsError("sample_two_mode_random: s_max must be > 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<SampledTwoMode> out;
    out.reserve(count);
    const int symmetric_every =
        bounds.symmetric_fraction > 0.0
            ? std::max(1, static_cast<int>(std::lround(1.0 / bounds.symmetric_fraction)))
            : 0;
    for (int i = 0; i < count; ++i) {
        const bool force_symmetric = symmetric_every > 0 && (i % symmetric_every) == 0;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            TwoModeParams p;
            p.s = 1.0 + uniform01(rng) * (bounds.s_max - 1.0);
            p.d = force_symmetric ? 0.0 : (2.0 * uniform01(rng) - 1.0) * (p.s - 1.0);
            const double g_lo = 2.0 * std::abs(p.d) + 1.0;
            const double g_hi = 2.0 * p.s - 1.0;
            p.g = g_lo + uniform01(rng) * (g_hi - g_lo);
            p.lambda = 2.0 * uniform01(rng) - 1.0;
            try {
                SampledTwoMode sample{p, two_mode_standard_form(p)};
                out.push_back(sample);
                break;
            } catch (const PhysicsError&) {
                continue; // rejection: redraw
            }
        }
    }
    return out;
}

// --------------------------- three-mode states -------------------------------

void ThreeModeParams::validate() const {
    const double a[3] = {a1, a2, a3};
    for (double v : a) {
        if (!(v >= 1.0)) throw PhysicsError("three-mode params: every a_j must be >= 1");
    }
    for (int k = 0; k < 3; ++k) {
        const int i = (k + 1) % 3, j = (k + 2) % 3;
        if (!(std::abs(a[i] - a[j]) + 1.0 <= a[k] + 1e-12) ||
            !(a[k] <= a[i] + a[j] - 1.0 + 1e-12)) {
            std::ostringstream os;
            os << "three-mode params violate the triangular inequality for a" << k + 1
               << " against (a" << i + 1 << ", a" << j + 1 << ")";
            throw PhysicsError(os.str());
        }
    }
}

gauss::CovarianceMatrix three_mode_symmetric(double a) {
    if (!(a >= 1.0)) throw PhysicsError("three_mode_symmetric: a must be >= 1");
    const double rad = std::max(0.0, 9.0 * a * a * a * a - 10.0 * a * a + 1.0);
    const double root = std::sqrt(rad);
    const double x_plus = (a * a - 1.0 + root) / (8.0 * a);
    const double x_minus = (a * a - 1.0 - root) / (8.0 * a);

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(6, 6);
    for (int j = 0; j < 3; ++j) {
        m(2 * j, 2 * j) = 0.5 * a;
        m(2 * j + 1, 2 * j + 1) = 0.5 * a;
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            m(2 * i, 2 * j) = m(2 * j, 2 * i) = x_plus;
            m(2 * i + 1, 2 * j + 1) = m(2 * j + 1, 2 * i + 1) = x_minus;
        }
    }
    return gauss::CovarianceMatrix(3, m);
}

gauss::CovarianceMatrix three_mode_general(const ThreeModeParams& p) {
    p.validate();
    const double a[3] = {p.a1, p.a2, p.a3};

    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(6, 6);
    for (int j = 0; j < 3; ++j) {
        m(2 * j, 2 * j) = 0.5 * a[j];
        m(2 * j + 1, 2 * j + 1) = 0.5 * a[j];
    }
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            const int k = 3 - i - j;
            const double diff = a[i] - a[j];
            const double sum = a[i] + a[j];
            const double lo = a[k] - 1.0;
            const double hi = a[k] + 1.0;
            const double r1 = std::max(0.0, (diff * diff - lo * lo) * (diff * diff - hi * hi));
            const double r2 = std::max(0.0, (sum * sum - lo * lo) * (sum * sum - hi * hi));
            const double denom = 4.0 * std::sqrt(a[i] * a[j]);
            const double c_plus = (std::sqrt(r1) + std::sqrt(r2)) / denom;
            const double c_minus = (std::sqrt(r1) - std::sqrt(r2)) / denom;
            m(2 * i, 2 * j) = m(2 * j, 2 * i) = 0.5 * c_plus;
            m(2 * i + 1, 2 * j + 1) = m(2 * j + 1, 2 * i + 1) = 0.5 * c_minus;
        }
    }
    return gauss::CovarianceMatrix(3, m);
}

double residual_contangle_symmetric(double a) {
    if (!(a >= 1.0)) throw PhysicsError("residual_contangle_symmetric: a must be >= 1");
    // Couplings in doubled units (vacuum = identity), where the closed form
    // for the residual contangle of this state lives.
    const double rad = std::max(0.0, 9.0 * a * a * a * a - 10.0 * a * a + 1.0);
    const double e_minus = (a * a - 1.0 - std::sqrt(rad)) / (4.0 * a);
    const double one_to_rest = std::asinh(std::sqrt(std::max(0.0, a * a - 1.0)));
    const double pair_arg = 2.0 * a * a + 4.0 * a * e_minus;
    const double pair_log = pair_arg > 0.0 ? std::min(0.0, std::log(pair_arg)) : 0.0;
    return std::max(0.0, one_to_rest * one_to_rest - 0.5 * pair_log * pair_log);
}

// ---------------------------- input correlators ------------------------------

std::array<double, 4> InputCorrelators::local_coefficients() const {
    if (n_modes() != 2) {
        throw PhysicsError("local_coefficients: defined for two-mode resources");
    }
    return {occupation[0], occupation[0] + 1.0, occupation[1], occupation[1] + 1.0};
}

InputCorrelators input_correlators(const gauss::CovarianceMatrix& optical, double omega_m) {
    const int n = optical.n_modes();
    const Eigen::MatrixXd& m = optical.entries();
    const double scale = std::max(m.cwiseAbs().maxCoeff(), 0.5);

    // Standard form: no q-p mixing anywhere, isotropic local blocks.
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (std::abs(m(2 * r, 2 * c + 1)) > kStandardFormTol * scale ||
                std::abs(m(2 * r + 1, 2 * c)) > kStandardFormTol * scale) {
                throw PhysicsError("input_correlators: matrix not in standard form (q-p mixing)");
            }
        }
        if (std::abs(m(2 * r, 2 * r) - m(2 * r + 1, 2 * r + 1)) > kStandardFormTol * scale) {
            throw PhysicsError("input_correlators: matrix not in standard form (anisotropic local block)");
        }
    }

    InputCorrelators corr;
    corr.sideband_frequency = omega_m;
    corr.occupation.resize(n);
    corr.cross_minus = Eigen::MatrixXd::Zero(n, n);
    corr.cross_plus = Eigen::MatrixXd::Zero(n, n);
    for (int j = 0; j < n; ++j) {
        corr.occupation[j] = m(2 * j, 2 * j) - 0.5;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const double qq = m(2 * i, 2 * j);
            const double pp = m(2 * i + 1, 2 * j + 1);
            corr.cross_minus(i, j) = 0.5 * (qq - pp);
            corr.cross_plus(i, j) = 0.5 * (qq + pp);
        }
    }
    return corr;
}

} // namespace omech::resource
