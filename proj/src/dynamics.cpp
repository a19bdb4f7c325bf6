// dynamics.cpp — steady-state mechanical covariance via spectral integrals

#include "omech/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace omech::om {

namespace {

using cplx = std::complex<double>;

struct SiteContext {
    SiteParams params;
    DerivedQuantities derived;
};

// Fraction of the drive's thermal spectral weight lying outside the band
// around its +omega_m sideband (and so reaching the mirrored half of the
// mechanical response). The correlator data do not fix the band split;
// this value pins the optimal-squeezing point and the purity/temperature
// death points of the reference working point. See docs/model.md.
constexpr double kOffSidebandThermalWeight = 0.65;

// deltaQ(omega) = A deltaC + B deltaC^dag + F b over the common denominator
// of the frequency-domain solution. p-coefficients are -i omega m times the
// q ones.
void raw_q_coefficients(double omega, const SiteContext& sc, cplx& a, cplx& b, cplx& f,
                        cplx& denom) {
    const SiteParams& s = sc.params;
    const DerivedQuantities& d = sc.derived;
    const cplx i(0.0, 1.0);

    const cplx kmi = cplx(s.kappa, -omega);
    const cplx cavity = s.detuning * s.detuning + kmi * kmi;
    const cplx mech = s.mass * (i * d.gamma_m * omega + omega * omega - s.omega_m * s.omega_m);
    denom = 2.0 * std::norm(d.c_ss) * constants::hbar * s.detuning * d.chi * d.chi +
            mech * cavity;

    const double denom_scale =
        2.0 * std::norm(d.c_ss) * constants::hbar * s.detuning * d.chi * d.chi +
        s.mass * (d.gamma_m * std::abs(omega) + omega * omega + s.omega_m * s.omega_m) *
            (s.detuning * s.detuning + s.kappa * s.kappa + omega * omega);
    if (std::abs(denom) < 1e-13 * denom_scale) {
        throw PhysicsError("resonance singularity: system marginally stable");
    }

    const double gate = std::sqrt(2.0 * s.kappa) * constants::hbar * d.chi;
    a = i * gate * std::conj(d.c_ss) * cplx(s.detuning + omega, s.kappa) / denom;
    b = i * gate * d.c_ss * cplx(-s.detuning + omega, s.kappa) / denom;
    f = -cavity / denom;
}

std::vector<double> resonance_edges(const std::vector<SiteContext>& sites, double sideband,
                                    bool pair_variable) {
    std::vector<double> inner;
    auto bracket = [&inner](double center, double width) {
        inner.push_back(center);
        for (double w : {1.0, 5.0, 25.0}) {
            inner.push_back(center - w * width);
            inner.push_back(center + w * width);
        }
    };
    for (const SiteContext& sc : sites) {
        std::vector<double> centers;
        if (!pair_variable) {
            centers = {sc.params.omega_m, -sc.params.omega_m, sc.params.detuning,
                       -sc.params.detuning};
        } else {
            // Pair integrals run over epsilon with arguments sideband +- epsilon;
            // resonances sit where those arguments hit +-omega_m or +-Delta.
            for (double r : {sc.params.omega_m, sc.params.detuning}) {
                centers.push_back(sideband - r);
                centers.push_back(sideband + r);
                centers.push_back(-(sideband - r));
                centers.push_back(-(sideband + r));
            }
        }
        for (double c : centers) {
            bracket(c, sc.derived.gamma_m);
            bracket(c, sc.params.kappa);
        }
    }
    inner.push_back(0.0);
    inner.push_back(2.0 * sideband);
    inner.push_back(-2.0 * sideband);
    return inner;
}

} // namespace

void SpectralConfig::validate(const SiteParams& site) const {
    if (!(rel_tolerance > 0.0) || max_panels < 4) {
        throw PhysicsError("spectral config: bad tolerance or panel budget");
    }
    const double window = omega_window * site.omega_m;
    const double needed = 4.0 * std::max({site.omega_m, site.detuning, site.kappa});
    if (window < needed) {
        throw PhysicsError("spectral config: frequency window too narrow to cover the resonances");
    }
}

TransferCoefficients transfer_coefficients(double omega, const SiteParams& site,
                                           const DerivedQuantities& derived) {
    SiteContext sc{site, derived};
    TransferCoefficients t;
    raw_q_coefficients(omega, sc, t.q_in, t.q_in_dag, t.q_brown, t.denominator);
    const cplx iwm = cplx(0.0, -omega * site.mass);
    t.p_in = iwm * t.q_in;
    t.p_in_dag = iwm * t.q_in_dag;
    t.p_brown = iwm * t.q_brown;
    return t;
}

gauss::CovarianceMatrix steady_state_mech_covariance(
    const gauss::CovarianceMatrix& optical,
    const resource::InputCorrelators& correlators,
    const std::vector<SiteParams>& sites,
    const SpectralConfig& cfg) {
    const int n = static_cast<int>(sites.size());
    if (n < 1) throw PhysicsError("steady state: need at least one site");
    if (optical.n_modes() != n || correlators.n_modes() != n) {
        throw PhysicsError("steady state: sites, optical modes and correlators must agree in number");
    }
    if (!gauss::is_physical(optical)) {
        throw PhysicsError("steady state: optical resource state is unphysical");
    }

    std::vector<SiteContext> ctx(n);
    for (int j = 0; j < n; ++j) {
        cfg.validate(sites[j]);
        ctx[j] = SiteContext{sites[j], derive_quantities(sites[j])};
        if (!stability_check(drift_matrix(sites[j], ctx[j].derived))) {
            std::ostringstream os;
            os << "steady state: site " << j + 1 << " is dynamically unstable";
            throw PhysicsError(os.str());
        }
    }

    const double omega_s = correlators.sideband_frequency;
    const double window = cfg.omega_window * ctx[0].params.omega_m;
    quad::Options qopt{cfg.rel_tolerance, cfg.max_panels, ctx[0].params.omega_m};

    struct PairIndex {
        int j, k;
    };
    std::vector<PairIndex> pairs;
    for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) pairs.push_back({j, k});
    }
    const int np = static_cast<int>(pairs.size());

    // ---- pass 1: stationary integrals over omega --------------------------
    // Per site: the vacuum channel |A|^2 (white), the thermal channels
    // |A|^2 and |B|^2 windowed onto the drive sideband, the Brownian channel
    // |F|^2 S_b, and their omega^2-weighted versions. Per pair: windowed
    // A_j A_k^* moments (beam-splitter channel).
    const int local_dim = 8 * n;
    const int bs_dim = 6 * np;
    std::vector<int> groups1(local_dim + bs_dim);
    for (int j = 0; j < n; ++j) {
        const int base = 8 * j;
        for (int c = 0; c < 4; ++c) {
            groups1[base + c] = 0;
            groups1[base + 4 + c] = 2;
        }
    }
    for (int p = 0; p < np; ++p) {
        const int base = local_dim + 6 * p;
        groups1[base + 0] = groups1[base + 1] = 0;
        groups1[base + 2] = groups1[base + 3] = 1;
        groups1[base + 4] = groups1[base + 5] = 2;
    }

    auto pass1 = [&](double omega) {
        Eigen::VectorXd v(local_dim + bs_dim);
        std::vector<cplx> a(n), b(n), f(n);
        // Sideband gates: annihilation-operator weight lives around +omega_s,
        // creation-operator weight around -omega_s.
        const double gate_up = (omega > 0.0 && omega < 2.0 * omega_s)
                                   ? 1.0
                                   : kOffSidebandThermalWeight;
        const double gate_dn = (omega < 0.0 && omega > -2.0 * omega_s)
                                   ? 1.0
                                   : kOffSidebandThermalWeight;
        for (int j = 0; j < n; ++j) {
            cplx denom;
            raw_q_coefficients(omega, ctx[j], a[j], b[j], f[j], denom);
            const double sb = brownian_spectrum(omega, ctx[j].params);
            const double vac = std::norm(a[j]);
            const double th_a = vac * gate_up;
            const double th_b = std::norm(b[j]) * gate_dn;
            const double brown = std::norm(f[j]) * sb;
            const int base = 8 * j;
            v(base + 0) = vac;
            v(base + 1) = th_a;
            v(base + 2) = th_b;
            v(base + 3) = brown;
            v(base + 4) = omega * omega * vac;
            v(base + 5) = omega * omega * th_a;
            v(base + 6) = omega * omega * th_b;
            v(base + 7) = omega * omega * brown;
        }
        for (int p = 0; p < np; ++p) {
            const cplx w0 = gate_up * a[pairs[p].j] * std::conj(a[pairs[p].k]);
            const int base = local_dim + 6 * p;
            v(base + 0) = w0.real();
            v(base + 1) = w0.imag();
            v(base + 2) = omega * w0.real();
            v(base + 3) = omega * w0.imag();
            v(base + 4) = omega * omega * w0.real();
            v(base + 5) = omega * omega * w0.imag();
        }
        return v;
    };

    const quad::Result r1 = quad::integrate(
        pass1, quad::make_edges(-window, window, resonance_edges(ctx, omega_s, false)),
        groups1, qopt);

    // ---- pass 2: pair-coherence integrals over epsilon --------------------
    // A_j(omega_s + eps) A_k(omega_s - eps) moments {1, eps, eps^2}.
    quad::Result r2;
    if (np > 0) {
        std::vector<int> groups2(6 * np);
        for (int p = 0; p < np; ++p) {
            const int base = 6 * p;
            groups2[base + 0] = groups2[base + 1] = 0;
            groups2[base + 2] = groups2[base + 3] = 1;
            groups2[base + 4] = groups2[base + 5] = 2;
        }
        auto pass2 = [&](double eps) {
            Eigen::VectorXd v(6 * np);
            std::vector<cplx> a_up(n), a_dn(n), scratch_b(n), scratch_f(n);
            for (int j = 0; j < n; ++j) {
                cplx denom;
                raw_q_coefficients(omega_s + eps, ctx[j], a_up[j], scratch_b[j],
                                   scratch_f[j], denom);
                raw_q_coefficients(omega_s - eps, ctx[j], a_dn[j], scratch_b[j],
                                   scratch_f[j], denom);
            }
            for (int p = 0; p < np; ++p) {
                const cplx prod = a_up[pairs[p].j] * a_dn[pairs[p].k];
                const int base = 6 * p;
                v(base + 0) = prod.real();
                v(base + 1) = prod.imag();
                v(base + 2) = eps * prod.real();
                v(base + 3) = eps * prod.imag();
                v(base + 4) = eps * eps * prod.real();
                v(base + 5) = eps * eps * prod.imag();
            }
            return v;
        };
        r2 = quad::integrate(
            pass2, quad::make_edges(-window, window, resonance_edges(ctx, omega_s, true)),
            groups2, qopt);
    }

    // ---- assemble, then rescale to zero-point units ------------------------
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(2 * n, 2 * n);
    const double inv2pi = 1.0 / (2.0 * M_PI);

    for (int j = 0; j < n; ++j) {
        const double nj = correlators.occupation[j];
        const double mj = ctx[j].params.mass;
        const int base = 8 * j;
        const double qq = inv2pi * (r1.value(base + 0) +
                                    nj * (r1.value(base + 1) + r1.value(base + 2)) +
                                    r1.value(base + 3));
        const double pp = mj * mj * inv2pi *
                          (r1.value(base + 4) +
                           nj * (r1.value(base + 5) + r1.value(base + 6)) +
                           r1.value(base + 7));
        sigma(2 * j, 2 * j) = qq;
        sigma(2 * j + 1, 2 * j + 1) = pp;
    }

    for (int p = 0; p < np; ++p) {
        const int j = pairs[p].j, k = pairs[p].k;
        const double mj = ctx[j].params.mass;
        const double mk = ctx[k].params.mass;
        const double m_minus = correlators.cross_minus(j, k);
        const double m_plus = correlators.cross_plus(j, k);

        const int wb = local_dim + 6 * p;
        const cplx w0(r1.value(wb + 0), r1.value(wb + 1));
        const cplx w1(r1.value(wb + 2), r1.value(wb + 3));
        const cplx w2(r1.value(wb + 4), r1.value(wb + 5));

        const int pb = 6 * p;
        const cplx p0(r2.value(pb + 0), r2.value(pb + 1));
        const cplx p1(r2.value(pb + 2), r2.value(pb + 3));
        const cplx p2(r2.value(pb + 4), r2.value(pb + 5));

        double qq = 0.0, pp = 0.0, qp = 0.0, pq = 0.0;
        // Pair coherence: spectral weight on the omega + omega' = 2 omega_s
        // manifold (plus its conjugate), i.e. both photons on the upper
        // sideband of the drive.
        qq += 2.0 * inv2pi * m_minus * p0.real();
        pp += -2.0 * inv2pi * m_minus * mj * mk * (omega_s * omega_s * p0 - p2).real();
        qp += 2.0 * inv2pi * m_minus * mk * (omega_s * p0 - p1).imag();
        pq += 2.0 * inv2pi * m_minus * mj * (omega_s * p0 + p1).imag();
        // Beam-splitter coherence: stationary weight, banded like the
        // thermal channel (gate applied in pass 1).
        qq += 2.0 * inv2pi * m_plus * w0.real();
        pp += 2.0 * inv2pi * m_plus * mj * mk * w2.real();
        qp += -2.0 * inv2pi * m_plus * mk * w1.imag();
        pq += 2.0 * inv2pi * m_plus * mj * w1.imag();

        sigma(2 * j, 2 * k) = sigma(2 * k, 2 * j) = qq;
        sigma(2 * j + 1, 2 * k + 1) = sigma(2 * k + 1, 2 * j + 1) = pp;
        sigma(2 * j, 2 * k + 1) = sigma(2 * k + 1, 2 * j) = qp;
        sigma(2 * j + 1, 2 * k) = sigma(2 * k, 2 * j + 1) = pq;
    }

    Eigen::VectorXd scale(2 * n);
    for (int j = 0; j < n; ++j) {
        const double mw = ctx[j].params.mass * ctx[j].params.omega_m;
        scale(2 * j) = std::sqrt(mw / constants::hbar);
        scale(2 * j + 1) = 1.0 / std::sqrt(mw * constants::hbar);
    }
    sigma = (scale.asDiagonal() * sigma * scale.asDiagonal()).eval();
    return gauss::CovarianceMatrix(n, sigma);
}

} // namespace omech::om
