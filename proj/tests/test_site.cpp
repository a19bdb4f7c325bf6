// test_site.cpp — derived quantities, drift matrix, stability, bath spectrum

#include <doctest.h>

#include <cmath>

#include "omech/site.hpp"

using namespace omech;
using om::SiteParams;

namespace {

SiteParams reference_site() { return SiteParams{}; }  // defaults carry the reference values

} // namespace

TEST_CASE("parameter validation") {
    SiteParams site = reference_site();
    CHECK(site.validate().empty());

    site.quality_factor = 50.0;
    CHECK_FALSE(site.validate().empty());  // warning, not an error

    site = reference_site();
    site.mass = -1.0;
    CHECK_THROWS_AS(site.validate(), PhysicsError);

    site = reference_site();
    site.bath_temperature = 0.0;
    CHECK_THROWS_AS(site.validate(), PhysicsError);

    site = reference_site();
    site.pump_power = 0.0;  // switched-off drive is allowed
    CHECK_NOTHROW(site.validate());
}

TEST_CASE("derived quantities at the reference working point") {
    const auto d = om::derive_quantities(reference_site());
    CHECK(d.chi == doctest::Approx(7.08e16).epsilon(5e-3));
    CHECK(d.pump_amplitude == doctest::Approx(5.4e11).epsilon(5e-3));
    CHECK(d.gamma_m == doctest::Approx(reference_site().omega_m / 7000.0).epsilon(1e-12));
    CHECK(std::abs(d.c_ss) ==
          doctest::Approx(d.pump_amplitude /
                          std::hypot(reference_site().kappa, reference_site().detuning))
              .epsilon(1e-12));
    // ground state at a microkelvin
    CHECK(d.n_bar < 1e-15);

    SUBCASE("occupation at 10 mK") {
        SiteParams warm = reference_site();
        warm.bath_temperature = 0.01;
        const auto dw = om::derive_quantities(warm);
        CHECK(dw.n_bar > 210.0);
        CHECK(dw.n_bar < 230.0);
    }
    SUBCASE("occupation vanishes as T -> 0") {
        SiteParams cold = reference_site();
        cold.bath_temperature = 1e-12;
        CHECK(om::derive_quantities(cold).n_bar == 0.0);
    }
}

TEST_CASE("drift matrix structure") {
    const SiteParams site = reference_site();
    const auto derived = om::derive_quantities(site);
    const auto k = om::drift_matrix(site, derived);

    CHECK(k.k(0, 0) == 0.0);
    CHECK(k.k(0, 1) == doctest::Approx(1.0 / site.mass));
    CHECK(k.k(0, 2) == 0.0);
    CHECK(k.k(1, 0) == doctest::Approx(-site.mass * site.omega_m * site.omega_m));
    CHECK(k.k(1, 1) == doctest::Approx(-derived.gamma_m));
    CHECK(k.k(2, 2) == doctest::Approx(-site.kappa));
    CHECK(k.k(2, 3) == doctest::Approx(site.detuning));
    CHECK(k.k(3, 2) == doctest::Approx(-site.detuning));

    SUBCASE("decoupled when the pump is off") {
        SiteParams off = site;
        off.pump_power = 0.0;
        const auto k0 = om::drift_matrix(off, om::derive_quantities(off));
        CHECK(k0.k.topRightCorner(2, 2).isZero());
        CHECK(k0.k.bottomLeftCorner(2, 2).isZero());
    }

    SUBCASE("real steady-state amplitude kills the (2,0) entry") {
        // c_ss is real when the detuning term vanishes in kappa + i Delta;
        // emulate by checking the entry is proportional to Im(c_ss).
        CHECK(k.k(2, 0) ==
              doctest::Approx(-std::sqrt(2.0) * derived.chi * derived.c_ss.imag()));
        CHECK(k.k(3, 0) ==
              doctest::Approx(std::sqrt(2.0) * derived.chi * derived.c_ss.real()));
    }
}

TEST_CASE("stability") {
    const SiteParams site = reference_site();
    CHECK(om::stability_check(om::drift_matrix(site, om::derive_quantities(site))));

    SUBCASE("decoupled damped blocks are stable") {
        SiteParams off = site;
        off.pump_power = 0.0;
        CHECK(om::stability_check(om::drift_matrix(off, om::derive_quantities(off))));
    }

    SUBCASE("marginal mechanical mode is flagged") {
        om::DriftMatrix k;
        k.mass = site.mass;
        k.omega_m = site.omega_m;
        k.k << 0, 1 / site.mass, 0, 0,
            -site.mass * site.omega_m * site.omega_m, 0.0, 0, 0,  // gamma_m = 0
            0, 0, -site.kappa, site.detuning,
            0, 0, -site.detuning, -site.kappa;
        CHECK_FALSE(om::stability_check(k));
    }
}

TEST_CASE("brownian spectrum") {
    const SiteParams site = reference_site();
    const double gamma_m = site.omega_m / site.quality_factor;
    const double omega = site.omega_m;

    SUBCASE("vacuum limit") {
        SiteParams cold = site;
        cold.bath_temperature = 1e-12;
        CHECK(om::brownian_spectrum(omega, cold) ==
              doctest::Approx(2.0 * om::constants::hbar * gamma_m * site.mass * omega)
                  .epsilon(1e-9));
        // one-sided: no weight at negative frequencies at T -> 0
        CHECK(om::brownian_spectrum(-omega, cold) ==
              doctest::Approx(0.0).scale(om::constants::hbar * gamma_m * site.mass * omega));
    }

    SUBCASE("zero-frequency limit is classical white noise") {
        CHECK(om::brownian_spectrum(0.0, site) ==
              doctest::Approx(2.0 * gamma_m * site.mass * om::constants::k_boltzmann *
                              site.bath_temperature)
                  .epsilon(1e-9));
    }

    SUBCASE("high-temperature linear growth") {
        SiteParams warm = site;
        warm.bath_temperature = 1.0;
        const double kt = om::constants::k_boltzmann * warm.bath_temperature;
        const double expected =
            gamma_m * warm.mass * (2.0 * kt + om::constants::hbar * omega);
        CHECK(om::brownian_spectrum(omega, warm) == doctest::Approx(expected).epsilon(1e-3));
    }

    SUBCASE("finite and positive at a microkelvin") {
        const double s = om::brownian_spectrum(omega, site);
        CHECK(s > 0.0);
        CHECK(std::isfinite(s));
    }
}
