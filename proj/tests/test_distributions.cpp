#include "doctest.h"

#include <cmath>
#include <numbers>

#include "stiran/distributions.hpp"
#include "stiran/errors.hpp"
#include "stiran/quadrature.hpp"
#include "stiran/scenario.hpp"

using namespace stiran;

namespace {
constexpr double kDeg = std::numbers::pi / 180.0;

Scenario at_theta(double deg) {
    Scenario sc = Scenario::baseline();
    sc.geom = OrbitGeometry::make(6371.0, 500.0, deg * kDeg, 10.0 * kDeg);
    return sc;
}
}  // namespace

TEST_CASE("quadrature basics") {
    CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 5.0) == doctest::Approx(1.0 - std::exp(-5.0)).epsilon(1e-10));
    auto r = integrate_panels([](double x) { return std::sqrt(x); }, {0.0, 0.5, 1.0}, Tolerance{1e-12, 1e-10});
    CHECK(r.value == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0), NumericalError);
    auto b = panel_breaks(0.0, 1.0, {-1.0, 0.5, 2.0});
    CHECK(b == std::vector<double>{0.0, 0.5, 1.0});
}

TEST_CASE("visibility probability") {
    // mpmath: 1 - exp(-lambda * arc)
    CHECK(visibility_probability(at_theta(90).sat()) == doctest::Approx(0.96565722526381567).epsilon(1e-12));
    CHECK(visibility_probability(at_theta(80).sat()) == doctest::Approx(0.90758613657675688).epsilon(1e-12));
    CHECK(visibility_probability(at_theta(70).sat()) == 0.0);
    auto sc = Scenario::baseline();
    sc.lambda_sat = 0.0;
    CHECK(visibility_probability(sc.sat()) == 0.0);
    sc.lambda_sat = 1.0;
    CHECK(visibility_probability(sc.sat()) == doctest::Approx(1.0));
    // monotone in lambda
    double prev = 0.0;
    for (double lam : {1e-5, 1e-4, 1e-3, 1e-2}) {
        sc.lambda_sat = lam;
        const double p = visibility_probability(sc.sat());
        CHECK(p > prev);
        prev = p;
    }
}

TEST_CASE("nearest satellite CCDF and PDF") {
    auto s90 = at_theta(90).sat();
    auto s80 = at_theta(80).sat();
    // mpmath oracles
    CHECK(nearest_sat_ccdf(1000.0, s90) == doctest::Approx(0.13561004030124107).epsilon(1e-11));
    CHECK(nearest_sat_ccdf(1500.0, s90) == doctest::Approx(0.019020992720514466).epsilon(1e-10));
    CHECK(nearest_sat_ccdf(1500.0, s80) == doctest::Approx(0.096630859856537235).epsilon(1e-11));
    CHECK(nearest_sat_pdf(1000.0, s90) == doctest::Approx(4.1141100292699948e-4).epsilon(1e-10));
    CHECK(nearest_sat_pdf(1500.0, s80) == doctest::Approx(7.6269085078940087e-4).epsilon(1e-10));

    CHECK(nearest_sat_ccdf(s90.cap.r_min_km, s90) == doctest::Approx(1.0));
    CHECK(nearest_sat_ccdf(s90.cap.r_max_km, s90) == doctest::Approx(0.0));
    CHECK_THROWS_AS(nearest_sat_ccdf(400.0, s90), OutOfSupport);
    CHECK_THROWS_AS(nearest_sat_ccdf(1800.0, s90), OutOfSupport);
    CHECK_THROWS_AS(nearest_sat_pdf(1800.0, s90), OutOfSupport);

    const double norm = integrate([&](double r) { return nearest_sat_pdf(r, s80); }, s80.cap.r_min_km, s80.cap.r_max_km,
                                  Tolerance{1e-10, 1e-9});
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("nearest satellite in orbit angle") {
    auto s = at_theta(90).sat();
    const double ta = visible_orbit_angle(s);
    CHECK(ta == doctest::Approx(3371.3636249080192 / (2 * 6871.0)).epsilon(1e-12));
    const double norm = integrate([&](double t) { return nearest_sat_pdf_angle(t, s); }, 0.0, ta);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
    // void probability: no satellite within distance r, unconditioned
    CHECK(sat_void_probability(500.0, s) == doctest::Approx(1.0));
    CHECK(sat_void_probability(s.cap.r_max_km, s) == doctest::Approx(1.0 - visibility_probability(s)).epsilon(1e-12));
}

TEST_CASE("nearest BS") {
    BsNetworkParams bs{1.0, 0.1};
    CHECK(nearest_bs_ccdf(0.1, bs) == 1.0);
    CHECK(nearest_bs_ccdf(1.0, bs) == doctest::Approx(0.044593073841293887).epsilon(1e-13));
    CHECK(nearest_bs_pdf(1.0, bs) == doctest::Approx(0.28018654636159212).epsilon(1e-13));
    CHECK_THROWS_AS(nearest_bs_ccdf(0.05, bs), OutOfSupport);
    auto r = integrate_panels([&](double x) { return nearest_bs_pdf(x, bs); }, bs_integration_breaks(bs), Tolerance{1e-12, 1e-10});
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(bs_integration_limit(bs) >= 0.1 + 10.0);
    CHECK(bs_integration_limit(BsNetworkParams{0.0, 0.3}) == 0.3);

    // sparse network still integrates correctly
    BsNetworkParams sparse{1e-9, 0.1};
    auto s = integrate_panels([&](double x) { return nearest_bs_pdf(x, sparse); }, bs_integration_breaks(sparse),
                              Tolerance{1e-14, 1e-10});
    CHECK(s.value == doctest::Approx(1.0).epsilon(1e-6));
}
