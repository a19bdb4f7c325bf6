// network.hpp — entanglement-distribution experiments: single points,
// boundary curves, parameter scans, optimization and tripartite
// classification of the output mechanical state.

#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "omech/dynamics.hpp"
#include "omech/resource.hpp"

namespace omech::net {

/// Outcome of pushing one optical resource through the network.
struct DistributionRecord {
    // Resource descriptor; unused scalars stay NaN (e.g. a 3-mode symmetric
    // resource fills only `a`).
    double s = std::numeric_limits<double>::quiet_NaN();
    double d = std::numeric_limits<double>::quiet_NaN();
    double g = std::numeric_limits<double>::quiet_NaN();
    double lambda = std::numeric_limits<double>::quiet_NaN();
    double a = std::numeric_limits<double>::quiet_NaN();

    double input_entanglement = 0.0;
    double output_entanglement = 0.0;
    double min_pt_symplectic = 0.0;
    bool physical = false;
};

struct TripartiteClassification {
    std::array<bool, 3> npt_flags = {false, false, false};
    enum class Verdict { fully_inseparable, partially_separable, fully_separable };
    Verdict verdict = Verdict::fully_separable;
};

std::string to_string(TripartiteClassification::Verdict v);

/// A bipartition counts as NPT (inseparable) when the minimum PT symplectic
/// eigenvalue is below 1/2 by more than this guard band.
constexpr double kNptGuard = 1e-6;

// ----------------------------- two-site experiments --------------------------

/// Input log-negativity -> steady state -> output log-negativity for a
/// two-mode resource driving a two-site network.
DistributionRecord distribution_point(const resource::StandardFormEntries& entries,
                                      const std::vector<om::SiteParams>& sites,
                                      const om::SpectralConfig& cfg);

/// TMSV boundary: distribution_point on tmsv(cosh eps) per grid value.
std::vector<std::pair<double, double>> boundary_curve(const std::vector<double>& eps_grid,
                                                      const std::vector<om::SiteParams>& sites,
                                                      const om::SpectralConfig& cfg);

/// Piecewise-linear interpolant of a boundary curve, used for dominance
/// comparisons at matched input entanglement.
class BoundaryCurve {
  public:
    BoundaryCurve(std::vector<double> eps, std::vector<double> ln_out);
    static BoundaryCurve compute(const std::vector<om::SiteParams>& sites,
                                 const om::SpectralConfig& cfg, double eps_max = 3.5,
                                 int points = 400);
    double operator()(double eps) const;
    const std::vector<double>& eps() const { return eps_; }
    const std::vector<double>& ln_out() const { return ln_; }

  private:
    std::vector<double> eps_, ln_;
};

struct OptimalS {
    double s_star = 0.0;
    double nu_min = 0.0;
};

/// Minimizer of the output PT symplectic eigenvalue over s for TMSV input
/// (d = 0, g = lambda = 1), bracketed golden-section to 1e-4 relative.
/// Throws PhysicsError when the bracket holds no interior minimum.
OptimalS optimal_s(const std::vector<om::SiteParams>& sites, const om::SpectralConfig& cfg,
                   std::pair<double, double> bracket = {1.05, 6.0});

/// Central-difference d nu_min / d s for TMSV input (step 1e-4 s); diagnostic
/// companion to optimal_s, not used by the optimizer itself.
double nu_min_slope(double s, const std::vector<om::SiteParams>& sites,
                    const om::SpectralConfig& cfg);

/// nu_min(g, s) surface for the d = 0, lambda = 1 family. Grid points with
/// g > 2s - 1 are outside the admissible wedge and come back NaN.
Eigen::MatrixXd purity_region_scan(const std::vector<double>& s_grid,
                                   const std::vector<double>& g_grid,
                                   const std::vector<om::SiteParams>& sites,
                                   const om::SpectralConfig& cfg);

/// Largest g at which some s still yields an entangled output, located by
/// bisection between g_lo (entangled) and g_hi (separable).
double purity_death_point(const std::vector<om::SiteParams>& sites,
                          const om::SpectralConfig& cfg, double g_lo = 1.0,
                          double g_hi = 8.0, double tol = 1e-3);

/// Maximum-over-s output entanglement per bath temperature.
std::vector<std::pair<double, double>> temperature_sweep(
    const std::vector<double>& t_grid, const std::vector<om::SiteParams>& sites,
    const om::SpectralConfig& cfg);

/// Largest T with positive maximal output entanglement (log-bisection).
double thermal_death_point(const std::vector<om::SiteParams>& sites,
                           const om::SpectralConfig& cfg, double t_lo = 1e-6,
                           double t_hi = 1e-1, double rel_tol = 1e-2);

// ----------------------------- three-site analysis ---------------------------

/// Two-mode entanglement of the (i, j) reduction of a 3-mode mechanical
/// state. input_ln, when known, is carried into the record.
DistributionRecord one_vs_one(const gauss::CovarianceMatrix& sigma_mech, int i, int j,
                              double input_ln = std::numeric_limits<double>::quiet_NaN());

/// Entanglement across the i | {j,k} split of a 3-mode mechanical state.
DistributionRecord one_vs_two(const gauss::CovarianceMatrix& sigma_mech, int i,
                              double input_ln = std::numeric_limits<double>::quiet_NaN());

TripartiteClassification classify_tripartite(const gauss::CovarianceMatrix& sigma_mech);

/// Full three-site pipeline for the symmetric resource with parameter a:
/// mechanical steady state plus matched input entanglements.
struct ThreeModeResult {
    double a = 1.0;
    gauss::CovarianceMatrix sigma_mech;
    DistributionRecord pair;      // one-vs-one, input = optical pair reduction
    DistributionRecord one_two;   // one-vs-two, input = optical 1|23 split
    TripartiteClassification classification;
};

ThreeModeResult three_mode_distribution(double a, const std::vector<om::SiteParams>& sites,
                                        const om::SpectralConfig& cfg);

// ------------------------------ random experiments ---------------------------

struct ExperimentSummary {
    int total = 0;
    int failed = 0;
    double entangled_fraction_symmetric = 0.0;   // among d = 0 draws
    double entangled_fraction_asymmetric = 0.0;  // among |d| > (s-1)/2 draws
};

struct RandomExperiment {
    std::vector<DistributionRecord> records;
    ExperimentSummary summary;
};

/// Deterministic-by-seed batch of distribution points over sampled two-mode
/// resources. Records that fail in the dynamics are flagged, not fatal.
RandomExperiment random_distribution_experiment(int count, std::uint64_t seed,
                                                const resource::SampleBounds& bounds,
                                                const std::vector<om::SiteParams>& sites,
                                                const om::SpectralConfig& cfg);

} // namespace omech::net
