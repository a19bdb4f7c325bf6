// network.cpp — experiments on the distributed mechanical state

#include "omech/network.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace omech::net {

namespace {

using gauss::CovarianceMatrix;
using gauss::ModePartition;

resource::InputCorrelators correlators_for(const CovarianceMatrix& optical,
                                           const std::vector<om::SiteParams>& sites) {
    if (sites.empty()) throw PhysicsError("network: no sites");
    const double omega_m = sites.front().omega_m;
    for (const om::SiteParams& s : sites) {
        if (std::abs(s.omega_m - omega_m) > 1e-9 * omega_m) {
            throw PhysicsError("network: sites must share the mechanical frequency the resource is tuned to");
        }
    }
    return resource::input_correlators(optical, omega_m);
}

CovarianceMatrix mech_state(const CovarianceMatrix& optical,
                            const std::vector<om::SiteParams>& sites,
                            const om::SpectralConfig& cfg) {
    return om::steady_state_mech_covariance(optical, correlators_for(optical, sites), sites, cfg);
}

double tmsv_nu_min(double s, const std::vector<om::SiteParams>& sites,
                   const om::SpectralConfig& cfg) {
    const CovarianceMatrix mech = mech_state(resource::tmsv(s), sites, cfg);
    return gauss::min_pt_symplectic(mech, ModePartition{{0}});
}

struct GoldenResult {
    double x = 0.0;
    double f = 0.0;
};

// Golden-section minimization; assumes a minimum inside [lo, hi].
template <typename F>
GoldenResult golden_min(F&& f, double lo, double hi, double rel_tol) {
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while ((b - a) > rel_tol * std::max(1.0, std::abs(a) + std::abs(b))) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? GoldenResult{x1, f1} : GoldenResult{x2, f2};
}

// Minimum of nu_min over s for a d=0, lambda=1 family at fixed g: coarse grid
// to bracket, then golden refinement.
double best_nu_over_s(double g, const std::vector<om::SiteParams>& sites,
                      const om::SpectralConfig& cfg, double s_lo, double s_hi) {
    auto nu_of_s = [&](double s) {
        const auto entries = resource::two_mode_standard_form({s, 0.0, g, 1.0});
        const CovarianceMatrix mech = mech_state(entries.to_covariance(), sites, cfg);
        return gauss::min_pt_symplectic(mech, ModePartition{{0}});
    };
    const double s_min = std::max(s_lo, 0.5 * (g + 1.0)); // g <= 2s - 1
    if (s_min >= s_hi) throw PhysicsError("best_nu_over_s: empty admissible s range");

    const int coarse = 17;
    double best_s = s_min, best_nu = std::numeric_limits<double>::infinity();
    std::vector<double> svals(coarse), nvals(coarse);
    for (int i = 0; i < coarse; ++i) {
        svals[i] = s_min + (s_hi - s_min) * i / (coarse - 1.0);
        nvals[i] = nu_of_s(svals[i]);
        if (nvals[i] < best_nu) {
            best_nu = nvals[i];
            best_s = svals[i];
        }
    }
    // Refine around the coarse minimum when it is interior.
    for (int i = 1; i + 1 < coarse; ++i) {
        if (svals[i] == best_s) {
            const GoldenResult r = golden_min(nu_of_s, svals[i - 1], svals[i + 1], 1e-4);
            return std::min(best_nu, r.f);
        }
    }
    return best_nu;
}

} // namespace

std::string to_string(TripartiteClassification::Verdict v) {
    switch (v) {
        case TripartiteClassification::Verdict::fully_inseparable: return "fully_inseparable";
        case TripartiteClassification::Verdict::partially_separable: return "partially_separable";
        case TripartiteClassification::Verdict::fully_separable: return "fully_separable";
    }
    return "unknown";
}

DistributionRecord distribution_point(const resource::StandardFormEntries& entries,
                                      const std::vector<om::SiteParams>& sites,
                                      const om::SpectralConfig& cfg) {
    const CovarianceMatrix optical = entries.to_covariance();
    DistributionRecord rec;
    rec.s = 0.5 * (entries.a + entries.b);
    rec.d = 0.5 * (entries.a - entries.b);
    rec.input_entanglement = gauss::log_negativity(optical, ModePartition{{0}});

    const CovarianceMatrix mech = mech_state(optical, sites, cfg);
    rec.min_pt_symplectic = gauss::min_pt_symplectic(mech, ModePartition{{0}});
    rec.output_entanglement = std::max(0.0, -std::log(2.0 * rec.min_pt_symplectic));
    rec.physical = gauss::is_physical(mech, 1e-6);
    return rec;
}

std::vector<std::pair<double, double>> boundary_curve(const std::vector<double>& eps_grid,
                                                      const std::vector<om::SiteParams>& sites,
                                                      const om::SpectralConfig& cfg) {
    std::vector<std::pair<double, double>> out;
    out.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        if (eps < 0.0) throw PhysicsError("boundary_curve: epsilon must be >= 0");
        const double s = std::cosh(eps);
        const auto rec = distribution_point({s, s, std::sqrt(s * s - 1.0),
                                             -std::sqrt(s * s - 1.0)},
                                            sites, cfg);
        out.emplace_back(eps, rec.output_entanglement);
    }
    return out;
}

BoundaryCurve::BoundaryCurve(std::vector<double> eps, std::vector<double> ln_out)
    : eps_(std::move(eps)), ln_(std::move(ln_out)) {
    if (eps_.size() != ln_.size() || eps_.size() < 2) {
        throw PhysicsError("BoundaryCurve: need matching grids with at least two points");
    }
}

BoundaryCurve BoundaryCurve::compute(const std::vector<om::SiteParams>& sites,
                                     const om::SpectralConfig& cfg, double eps_max,
                                     int points) {
    if (points < 2 || !(eps_max > 0.0)) {
        throw PhysicsError("BoundaryCurve: need eps_max > 0 and at least two points");
    }
    std::vector<double> eps(points), ln(points);
    for (int i = 0; i < points; ++i) {
        eps[i] = eps_max * i / (points - 1.0);
    }
    const auto curve = boundary_curve(eps, sites, cfg);
    for (int i = 0; i < points; ++i) ln[i] = curve[i].second;
    return BoundaryCurve(std::move(eps), std::move(ln));
}

double BoundaryCurve::operator()(double eps) const {
    if (eps <= eps_.front()) return ln_.front();
    if (eps >= eps_.back()) return ln_.back();
    const auto it = std::upper_bound(eps_.begin(), eps_.end(), eps);
    const std::size_t hi = static_cast<std::size_t>(it - eps_.begin());
    const std::size_t lo = hi - 1;
    const double t = (eps - eps_[lo]) / (eps_[hi] - eps_[lo]);
    return ln_[lo] + t * (ln_[hi] - ln_[lo]);
}

OptimalS optimal_s(const std::vector<om::SiteParams>& sites, const om::SpectralConfig& cfg,
                   std::pair<double, double> bracket) {
    auto nu = [&](double s) { return tmsv_nu_min(s, sites, cfg); };
    const double f_lo = nu(bracket.first);
    const double f_hi = nu(bracket.second);
    const GoldenResult r = golden_min(nu, bracket.first, bracket.second, 1e-4);
    if (r.f >= std::min(f_lo, f_hi) - 1e-12) {
        std::ostringstream os;
        os << "optimal_s: no interior minimum in bracket; nu(" << bracket.first
           << ") = " << f_lo << ", nu(" << bracket.second << ") = " << f_hi;
        throw PhysicsError(os.str());
    }
    return OptimalS{r.x, r.f};
}

double nu_min_slope(double s, const std::vector<om::SiteParams>& sites,
                    const om::SpectralConfig& cfg) {
    const double h = 1e-4 * s;
    return (tmsv_nu_min(s + h, sites, cfg) - tmsv_nu_min(s - h, sites, cfg)) / (2.0 * h);
}

Eigen::MatrixXd purity_region_scan(const std::vector<double>& s_grid,
                                   const std::vector<double>& g_grid,
                                   const std::vector<om::SiteParams>& sites,
                                   const om::SpectralConfig& cfg) {
    Eigen::MatrixXd nu(g_grid.size(), s_grid.size());
    nu.setConstant(std::numeric_limits<double>::quiet_NaN());
    for (std::size_t gi = 0; gi < g_grid.size(); ++gi) {
        for (std::size_t si = 0; si < s_grid.size(); ++si) {
            const double g = g_grid[gi], s = s_grid[si];
            if (!(g >= 1.0) || !(s >= 1.0) || g > 2.0 * s - 1.0) continue;
            const auto entries = resource::two_mode_standard_form({s, 0.0, g, 1.0});
            const CovarianceMatrix mech = mech_state(entries.to_covariance(), sites, cfg);
            nu(gi, si) = gauss::min_pt_symplectic(mech, ModePartition{{0}});
        }
    }
    return nu;
}

double purity_death_point(const std::vector<om::SiteParams>& sites,
                          const om::SpectralConfig& cfg, double g_lo, double g_hi,
                          double tol) {
    const double s_hi = 12.0;
    auto entangled = [&](double g) {
        return best_nu_over_s(g, sites, cfg, 1.0001, s_hi) < 0.5 - kNptGuard;
    };
    if (!entangled(g_lo)) {
        throw PhysicsError("purity_death_point: no entanglement at the lower end of the bracket");
    }
    if (entangled(g_hi)) {
        throw PhysicsError("purity_death_point: still entangled at the upper end of the bracket");
    }
    while (g_hi - g_lo > tol) {
        const double mid = 0.5 * (g_lo + g_hi);
        (entangled(mid) ? g_lo : g_hi) = mid;
    }
    return 0.5 * (g_lo + g_hi);
}

std::vector<std::pair<double, double>> temperature_sweep(
    const std::vector<double>& t_grid, const std::vector<om::SiteParams>& sites,
    const om::SpectralConfig& cfg) {
    std::vector<std::pair<double, double>> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        if (!(t > 0.0)) throw PhysicsError("temperature_sweep: temperatures must be > 0");
        std::vector<om::SiteParams> warm = sites;
        for (om::SiteParams& s : warm) s.bath_temperature = t;
        const double nu = best_nu_over_s(1.0, warm, cfg, 1.0001, 8.0);
        out.emplace_back(t, std::max(0.0, -std::log(2.0 * nu)));
    }
    return out;
}

double thermal_death_point(const std::vector<om::SiteParams>& sites,
                           const om::SpectralConfig& cfg, double t_lo, double t_hi,
                           double rel_tol) {
    auto entangled = [&](double t) {
        std::vector<om::SiteParams> warm = sites;
        for (om::SiteParams& s : warm) s.bath_temperature = t;
        return best_nu_over_s(1.0, warm, cfg, 1.0001, 8.0) < 0.5 - kNptGuard;
    };
    if (!entangled(t_lo)) {
        throw PhysicsError("thermal_death_point: no entanglement at the cold end");
    }
    if (entangled(t_hi)) {
        throw PhysicsError("thermal_death_point: still entangled at the hot end");
    }
    while (t_hi / t_lo > 1.0 + rel_tol) {
        const double mid = std::sqrt(t_lo * t_hi);
        (entangled(mid) ? t_lo : t_hi) = mid;
    }
    return std::sqrt(t_lo * t_hi);
}

// ----------------------------- three-site analysis ---------------------------

DistributionRecord one_vs_one(const CovarianceMatrix& sigma_mech, int i, int j,
                              double input_ln) {
    if (sigma_mech.n_modes() != 3) throw PhysicsError("one_vs_one: need a 3-mode state");
    if (i == j) throw PhysicsError("one_vs_one: mode indices must differ");
    const CovarianceMatrix pair = gauss::reduce(sigma_mech, {i, j});
    DistributionRecord rec;
    rec.input_entanglement = input_ln;
    rec.min_pt_symplectic = gauss::min_pt_symplectic(pair, ModePartition{{0}});
    rec.output_entanglement = std::max(0.0, -std::log(2.0 * rec.min_pt_symplectic));
    rec.physical = gauss::is_physical(pair, 1e-6);
    return rec;
}

DistributionRecord one_vs_two(const CovarianceMatrix& sigma_mech, int i, double input_ln) {
    if (sigma_mech.n_modes() != 3) throw PhysicsError("one_vs_two: need a 3-mode state");
    DistributionRecord rec;
    rec.input_entanglement = input_ln;
    rec.min_pt_symplectic = gauss::min_pt_symplectic(sigma_mech, ModePartition{{i}});
    rec.output_entanglement = std::max(0.0, -std::log(2.0 * rec.min_pt_symplectic));
    rec.physical = gauss::is_physical(sigma_mech, 1e-6);
    return rec;
}

TripartiteClassification classify_tripartite(const CovarianceMatrix& sigma_mech) {
    if (sigma_mech.n_modes() != 3) throw PhysicsError("classify_tripartite: need a 3-mode state");
    TripartiteClassification c;
    int npt_count = 0;
    for (int i = 0; i < 3; ++i) {
        const double nu = gauss::min_pt_symplectic(sigma_mech, ModePartition{{i}});
        c.npt_flags[i] = nu < 0.5 - kNptGuard;
        npt_count += c.npt_flags[i] ? 1 : 0;
    }
    using V = TripartiteClassification::Verdict;
    c.verdict = npt_count == 3   ? V::fully_inseparable
                : npt_count == 0 ? V::fully_separable
                                 : V::partially_separable;
    return c;
}

ThreeModeResult three_mode_distribution(double a, const std::vector<om::SiteParams>& sites,
                                        const om::SpectralConfig& cfg) {
    if (sites.size() != 3) throw PhysicsError("three_mode_distribution: need three sites");
    const CovarianceMatrix optical = resource::three_mode_symmetric(a);
    const CovarianceMatrix mech = mech_state(optical, sites, cfg);

    const double in_pair =
        gauss::log_negativity(gauss::reduce(optical, {0, 1}), ModePartition{{0}});
    const double in_split = gauss::log_negativity(optical, ModePartition{{0}});

    DistributionRecord pair = one_vs_one(mech, 0, 1, in_pair);
    pair.a = a;
    DistributionRecord split = one_vs_two(mech, 0, in_split);
    split.a = a;
    return ThreeModeResult{a, mech, pair, split, classify_tripartite(mech)};
}

// ------------------------------ random experiments ---------------------------

RandomExperiment random_distribution_experiment(int count, std::uint64_t seed,
                                                const resource::SampleBounds& bounds,
                                                const std::vector<om::SiteParams>& sites,
                                                const om::SpectralConfig& cfg) {
    if (count < 1) throw PhysicsError("random_distribution_experiment: count must be >= 1");
    const auto samples = resource::sample_two_mode_random(bounds, seed, count);

    RandomExperiment exp;
    exp.records.reserve(samples.size());
    int sym_total = 0, sym_entangled = 0, asym_total = 0, asym_entangled = 0;
    for (const auto& sample : samples) {
        DistributionRecord rec;
        rec.s = sample.params.s;
        rec.d = sample.params.d;
        rec.g = sample.params.g;
        rec.lambda = sample.params.lambda;
        try {
            DistributionRecord full = distribution_point(sample.entries, sites, cfg);
            rec.input_entanglement = full.input_entanglement;
            rec.output_entanglement = full.output_entanglement;
            rec.min_pt_symplectic = full.min_pt_symplectic;
            rec.physical = full.physical;
        } catch (const std::exception&) {
            rec.physical = false;
            ++exp.summary.failed;
        }
        const bool entangled = rec.output_entanglement > 0.0;
        if (std::abs(rec.d) < 1e-12) {
            ++sym_total;
            sym_entangled += entangled ? 1 : 0;
        } else if (std::abs(rec.d) > 0.5 * (rec.s - 1.0)) {
            ++asym_total;
            asym_entangled += entangled ? 1 : 0;
        }
        exp.records.push_back(rec);
    }
    exp.summary.total = static_cast<int>(exp.records.size());
    exp.summary.entangled_fraction_symmetric =
        sym_total > 0 ? static_cast<double>(sym_entangled) / sym_total : 0.0;
    exp.summary.entangled_fraction_asymmetric =
        asym_total > 0 ? static_cast<double>(asym_entangled) / asym_total : 0.0;
    return exp;
}

} // namespace omech::net
