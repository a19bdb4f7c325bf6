// test_network.cpp — distribution experiments and tripartite analysis

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "omech/network.hpp"

using namespace omech;
using gauss::CovarianceMatrix;
using gauss::ModePartition;

namespace {

std::vector<om::SiteParams> two_sites() { return {om::SiteParams{}, om::SiteParams{}}; }
std::vector<om::SiteParams> three_sites() { return std::vector<om::SiteParams>(3, om::SiteParams{}); }

} // namespace

TEST_CASE("distribution point") {
    const auto vacuum_point =
        net::distribution_point({1.0, 1.0, 0.0, 0.0}, two_sites(), {});
    CHECK(vacuum_point.input_entanglement == 0.0);
    CHECK(vacuum_point.output_entanglement == 0.0);
    CHECK(vacuum_point.physical);

    const double s = 2.501;
    const double c = std::sqrt(s * s - 1.0);
    const auto optimal = net::distribution_point({s, s, c, -c}, two_sites(), {});
    CHECK(optimal.input_entanglement == doctest::Approx(std::acosh(s)).epsilon(1e-10));
    CHECK(optimal.output_entanglement > 0.5);
    CHECK(optimal.min_pt_symplectic < 0.5);
}

TEST_CASE("boundary curve shape") {
    std::vector<double> grid;
    for (int i = 0; i <= 30; ++i) grid.push_back(3.3 * i / 30.0);
    const auto curve = net::boundary_curve(grid, two_sites(), {});

    CHECK(curve.front().second == 0.0);

    // single interior maximum near arccosh of the optimal squeezing
    std::size_t argmax = 0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        if (curve[i].second > curve[argmax].second) argmax = i;
    }
    CHECK(curve[argmax].first > 1.2);
    CHECK(curve[argmax].first < 1.9);
    CHECK(curve[argmax].second > curve.back().second);

    // a strictly positive input threshold exists
    CHECK(curve[1].second == 0.0);

    CHECK_THROWS_AS(net::boundary_curve({-0.5}, two_sites(), {}), PhysicsError);
}

TEST_CASE("boundary interpolation") {
    net::BoundaryCurve curve({0.0, 1.0, 2.0}, {0.0, 0.5, 0.2});
    CHECK(curve(0.5) == doctest::Approx(0.25));
    CHECK(curve(1.5) == doctest::Approx(0.35));
    CHECK(curve(-1.0) == doctest::Approx(0.0));
    CHECK(curve(9.0) == doctest::Approx(0.2));
    CHECK_THROWS_AS(net::BoundaryCurve({0.0}, {0.0}), PhysicsError);
}

TEST_CASE("optimal squeezing search") {
    const auto opt = net::optimal_s(two_sites(), {});
    CHECK(opt.s_star > 2.3);
    CHECK(opt.s_star < 2.7);
    CHECK(opt.nu_min < 0.5);

    // unimodality of nu(s): strictly decreasing before the minimum, then
    // nondecreasing after it, on a 200-point grid over [1, 6]
    const auto sites = two_sites();
    std::vector<double> nu;
    for (int i = 0; i < 200; ++i) {
        const double s = 1.001 + (6.0 - 1.001) * i / 199.0;
        const double cpl = std::sqrt(s * s - 1.0);
        nu.push_back(net::distribution_point({s, s, cpl, -cpl}, sites, {}).min_pt_symplectic);
    }
    const std::size_t argmin = std::min_element(nu.begin(), nu.end()) - nu.begin();
    CHECK(argmin > 0);
    CHECK(argmin < nu.size() - 1);
    for (std::size_t i = 0; i < argmin; ++i) CHECK(nu[i] > nu[i + 1]);
    for (std::size_t i = argmin; i + 1 < nu.size(); ++i) CHECK(nu[i + 1] >= nu[i]);

    SUBCASE("slope diagnostic crosses zero at the optimum") {
        CHECK(std::abs(net::nu_min_slope(opt.s_star, sites, {})) < 1e-4);
        CHECK(net::nu_min_slope(1.5, sites, {}) < 0.0);
        CHECK(net::nu_min_slope(4.0, sites, {}) > 0.0);
    }

    SUBCASE("bracket without an interior minimum is rejected") {
        CHECK_THROWS_AS(net::optimal_s(two_sites(), {}, {1.05, 1.2}), PhysicsError);
    }
}

TEST_CASE("purity scan: the entangled wedge shrinks with g") {
    const std::vector<double> s_grid{2.0, 2.5, 3.0, 3.5, 4.0, 5.0};
    const std::vector<double> g_grid{1.0, 3.0, 4.5, 6.5};
    const Eigen::MatrixXd nu = net::purity_region_scan(s_grid, g_grid, two_sites(), {});

    REQUIRE(nu.rows() == 4);
    REQUIRE(nu.cols() == 6);
    CHECK(std::isnan(nu(3, 0)));  // g = 6.5 needs s >= 3.75
    CHECK_FALSE(std::isnan(nu(0, 0)));

    // minimum over s per admissible row grows with g and crosses 1/2
    CHECK(nu.row(0).minCoeff() < 0.5);
    double previous = -1.0;
    for (int gi = 0; gi < nu.rows(); ++gi) {
        double row_min = std::numeric_limits<double>::infinity();
        for (int si = 0; si < nu.cols(); ++si) {
            if (!std::isnan(nu(gi, si))) row_min = std::min(row_min, nu(gi, si));
        }
        CHECK(row_min > previous);
        previous = row_min;
    }
    CHECK(previous > 0.5);  // g = 6.5 row is separable

    // the optimal s moves right as g grows (NaN entries are inadmissible)
    auto argmin_skipping_nan = [&](int gi) {
        int best = -1;
        for (int si = 0; si < nu.cols(); ++si) {
            if (std::isnan(nu(gi, si))) continue;
            if (best < 0 || nu(gi, si) < nu(gi, best)) best = si;
        }
        return best;
    };
    CHECK(argmin_skipping_nan(2) >= argmin_skipping_nan(0));
}

TEST_CASE("temperature sweep is monotone and dies in the expected decade") {
    const auto sweep =
        net::temperature_sweep({1e-6, 1e-4, 1e-3, 1e-2, 3e-2}, two_sites(), {});
    CHECK(sweep.front().second > 0.5);
    for (std::size_t i = 1; i < sweep.size(); ++i) {
        CHECK(sweep[i].second <= sweep[i - 1].second + 1e-9);
    }
    CHECK(sweep.back().second == 0.0);
    CHECK_THROWS_AS(net::temperature_sweep({-1.0}, two_sites(), {}), PhysicsError);
}

TEST_CASE("three-mode analysis") {
    const auto res = net::three_mode_distribution(2.0, three_sites(), {});

    SUBCASE("pair reductions are identical by symmetry") {
        const auto r01 = net::one_vs_one(res.sigma_mech, 0, 1);
        const auto r02 = net::one_vs_one(res.sigma_mech, 0, 2);
        const auto r12 = net::one_vs_one(res.sigma_mech, 1, 2);
        CHECK(std::abs(r01.output_entanglement - r02.output_entanglement) < 1e-9);
        CHECK(std::abs(r01.output_entanglement - r12.output_entanglement) < 1e-9);
        CHECK_THROWS_AS(net::one_vs_one(res.sigma_mech, 1, 1), PhysicsError);
    }

    SUBCASE("one-vs-two splits are identical by symmetry") {
        const auto s0 = net::one_vs_two(res.sigma_mech, 0);
        const auto s1 = net::one_vs_two(res.sigma_mech, 1);
        const auto s2 = net::one_vs_two(res.sigma_mech, 2);
        CHECK(std::abs(s0.output_entanglement - s1.output_entanglement) < 1e-9);
        CHECK(std::abs(s0.output_entanglement - s2.output_entanglement) < 1e-9);
    }

    SUBCASE("classification in the working range") {
        CHECK(res.classification.verdict ==
              net::TripartiteClassification::Verdict::fully_inseparable);
        CHECK(res.classification.npt_flags[0]);
        CHECK(res.classification.npt_flags[1]);
        CHECK(res.classification.npt_flags[2]);
    }
}

TEST_CASE("classification of composed states") {
    CHECK(net::classify_tripartite(CovarianceMatrix::vacuum(3)).verdict ==
          net::TripartiteClassification::Verdict::fully_separable);

    // TMSV (x) thermal: modes 0 and 1 entangled with each other, mode 2 free
    const auto mixed = CovarianceMatrix::tensor(resource::tmsv(2.0),
                                                CovarianceMatrix::thermal({0.8}));
    const auto verdict = net::classify_tripartite(mixed);
    CHECK(verdict.verdict == net::TripartiteClassification::Verdict::partially_separable);
    CHECK(verdict.npt_flags[0]);
    CHECK(verdict.npt_flags[1]);
    CHECK_FALSE(verdict.npt_flags[2]);

    SUBCASE("relabeling invariance") {
        Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(6, 6);
        // rotate modes 0 -> 1 -> 2 -> 0
        perm(2, 0) = perm(3, 1) = perm(4, 2) = perm(5, 3) = perm(0, 4) = perm(1, 5) = 1.0;
        const CovarianceMatrix rotated(3, perm * mixed.entries() * perm.transpose());
        const auto rotated_verdict = net::classify_tripartite(rotated);
        CHECK(rotated_verdict.verdict == verdict.verdict);
        CHECK(rotated_verdict.npt_flags[1]);
        CHECK(rotated_verdict.npt_flags[2]);
        CHECK_FALSE(rotated_verdict.npt_flags[0]);
    }
}

TEST_CASE("random distribution experiment") {
    const auto exp =
        net::random_distribution_experiment(60, 4242, {4.0, 0.5}, two_sites(), {});
    CHECK(exp.records.size() == 60);
    CHECK(exp.summary.total == 60);
    CHECK(exp.summary.failed == 0);

    const auto repeat =
        net::random_distribution_experiment(60, 4242, {4.0, 0.5}, two_sites(), {});
    for (std::size_t i = 0; i < exp.records.size(); ++i) {
        CHECK(exp.records[i].output_entanglement == repeat.records[i].output_entanglement);
    }

    // the symmetric sub-ensemble is the better distributor
    CHECK(exp.summary.entangled_fraction_symmetric >=
          exp.summary.entangled_fraction_asymmetric);
}
