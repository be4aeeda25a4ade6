#include "doctest.h"

#include <cmath>
#include <numbers>

#include "stiran/errors.hpp"
#include "stiran/geometry.hpp"
#include "stiran/montecarlo.hpp"

using namespace stiran;

namespace {
constexpr double kDeg = std::numbers::pi / 180.0;
// mpmath, 30 digits
constexpr double kRmax = 1694.5672211546794;
constexpr double kCapBase = 6665.2585098876242;
constexpr double kArc90 = 3371.3636249080192;
constexpr double kArc80 = 2381.4782745408450;
constexpr double kRmin80 = 1257.0145217915483;

OrbitGeometry base(double theta_deg = 90.0, double elev_deg = 10.0) {
    return OrbitGeometry::make(6371.0, 500.0, theta_deg * kDeg, elev_deg * kDeg);
}
}  // namespace

TEST_CASE("orbit radius is exact sum") {
    auto g = base();
    CHECK(g.orbit_radius_km == 6871.0);
}

TEST_CASE("invalid geometry rejected") {
    CHECK_THROWS_AS(OrbitGeometry::make(-1.0, 500.0, 1.0, 0.1), InvalidArgument);
    CHECK_THROWS_AS(OrbitGeometry::make(6371.0, 0.0, 1.0, 0.1), InvalidArgument);
    CHECK_THROWS_AS(OrbitGeometry::make(6371.0, 500.0, 4.0, 0.1), InvalidArgument);
    CHECK_THROWS_AS(OrbitGeometry::make(6371.0, 500.0, 1.0, 1.7), InvalidArgument);
}

TEST_CASE("slant range bounds") {
    auto sr = slant_range_bounds(base());
    CHECK(sr.r_min_km == doctest::Approx(500.0).epsilon(1e-14));
    CHECK(sr.r_max_km == doctest::Approx(kRmax).epsilon(1e-13));
    CHECK(slant_range_bounds(base(80.0)).r_min_km == doctest::Approx(kRmin80).epsilon(1e-13));

    // horizon cap
    auto horizon = OrbitGeometry::make(6371.0, 500.0, 90 * kDeg, 0.0);
    CHECK(slant_range_bounds(horizon).r_max_km == doctest::Approx(std::sqrt(6871.0 * 6871.0 - 6371.0 * 6371.0)));
    // zenith-only visibility
    auto zen = OrbitGeometry::make(6371.0, 500.0, 90 * kDeg, 90 * kDeg);
    CHECK(slant_range_bounds(zen).r_max_km == doctest::Approx(500.0).epsilon(1e-12));
    CHECK(visible_cap(zen).cap_base_km == doctest::Approx(6871.0).epsilon(1e-12));
    CHECK_FALSE(visible_cap(zen).orbit_visible());
}

TEST_CASE("r_max matches brute force over the minimum elevation circle") {
    // distance from the user to the orbit sphere along the 10 deg elevation ray
    double best = 0.0;
    for (int i = 0; i <= 200000; ++i) {
        const double r = 400.0 + 2000.0 * i / 200000.0;
        const double x = r * std::cos(10 * kDeg), z = 6371.0 + r * std::sin(10 * kDeg);
        if (x * x + z * z <= 6871.0 * 6871.0) best = r;
    }
    CHECK(std::abs(best - kRmax) < 0.02);
}

TEST_CASE("visible cap") {
    auto cap = visible_cap(base());
    CHECK(cap.cap_base_km == doctest::Approx(kCapBase).epsilon(1e-13));
    CHECK(cap.cap_base_km > 6371.0);
    CHECK(cap.cap_base_km < 6871.0);
    CHECK(cap.orbit_visible());
    CHECK(visible_cap(OrbitGeometry::make(6371.0, 500.0, 90 * kDeg, 0.0)).cap_base_km == doctest::Approx(6371.0));
    CHECK_FALSE(visible_cap(base(70.0)).orbit_visible());
}

TEST_CASE("eta and arc length") {
    CHECK(eta(6871.0, 90 * kDeg, 6871.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(eta(6871.0, 0.0, kCapBase), DegenerateOrbit);
    CHECK(visible_arc_length(6871.0, 90 * kDeg, kCapBase) == doctest::Approx(kArc90).epsilon(1e-12));
    CHECK(visible_arc_length(6871.0, 80 * kDeg, kCapBase) == doctest::Approx(kArc80).epsilon(1e-12));
    // orbit top below the cap base
    CHECK(visible_arc_length(6871.0, 70 * kDeg, kCapBase) == 0.0);
    CHECK(visible_arc_length(6871.0, 0.0, kCapBase) == 0.0);
    // cap base at the orbit's top
    CHECK(visible_arc_length(6871.0, 90 * kDeg, 6871.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("clamp_cosine") {
    CHECK(clamp_cosine(1.0 + 1e-14) == 1.0);
    CHECK(clamp_cosine(-1.0 - 1e-14) == -1.0);
    CHECK(clamp_cosine(0.3) == 0.3);
    CHECK_THROWS_AS(clamp_cosine(1.1), NumericalError);
}

TEST_CASE("off-axis angle") {
    auto g = base();
    CHECK(off_axis_angle(500.0, g) == doctest::Approx(0.0).epsilon(1e-7));
    // law of cosines at the satellite
    const double r = 1200.0;
    const double expect = std::acos((r * r + 6871.0 * 6871.0 - 6371.0 * 6371.0) / (2 * r * 6871.0));
    CHECK(off_axis_angle(r, g) == doctest::Approx(expect).epsilon(1e-13));
    CHECK_THROWS_AS(off_axis_angle(0.0, g), InvalidDistance);
    // monotone on the visible support
    double prev = -1.0;
    for (double x = 500.0; x <= kRmax; x += 10.0) {
        const double psi = off_axis_angle(x, g);
        CHECK(psi > prev);
        prev = psi;
    }
}

TEST_CASE("distance and orbit angle are inverse") {
    for (double th : {90.0, 80.0}) {
        auto g = base(th);
        CHECK(distance_at_orbit_angle(0.0, g) == doctest::Approx(slant_range_bounds(g).r_min_km).epsilon(1e-13));
        for (double t : {0.01, 0.1, 0.2, 0.5, 1.0, 2.0}) {
            CHECK(orbit_angle_at_distance(distance_at_orbit_angle(t, g), g) == doctest::Approx(t).epsilon(1e-10));
        }
    }
    auto g = base();
    for (double psi : {0.5 * kDeg, 10 * kDeg, 40 * kDeg}) {
        const double r = distance_at_off_axis(psi, g);
        CHECK(off_axis_angle(r, g) == doctest::Approx(psi).epsilon(1e-10));
    }
    CHECK(std::isinf(distance_at_off_axis(80 * kDeg, g)));
}

TEST_CASE("cap_base_for_distance") {
    auto g = base();
    CHECK(cap_base_for_distance(500.0, g) == doctest::Approx(6871.0));
    CHECK(cap_base_for_distance(kRmax, g) == doctest::Approx(kCapBase).epsilon(1e-12));
}

TEST_CASE("3-D placement agrees with the closed forms") {
    auto g = base(80.0);
    auto top = mc::geometry_of(0.0, g);
    CHECK(top.distance_km == doctest::Approx(kRmin80).epsilon(1e-12));
    CHECK(top.visible);
    auto g90 = base();
    CHECK(mc::geometry_of(0.0, g90).distance_km == doctest::Approx(500.0).epsilon(1e-12));

    // fraction of visible angles times circumference gives the arc length
    const int n = 1000000;
    int vis = 0;
    double rmin = 1e300;
    for (int i = 0; i < n; ++i) {
        auto v = mc::geometry_of(2 * std::numbers::pi * (i + 0.5) / n - std::numbers::pi, g);
        vis += v.visible;
        rmin = std::min(rmin, v.distance_km);
        if (v.visible) {
            REQUIRE(v.distance_km <= kRmax + 1e-6);
        }
    }
    const double arc = 2 * std::numbers::pi * 6871.0 * vis / n;
    CHECK(std::abs(arc / kArc80 - 1.0) < 0.005);
    CHECK(std::abs(rmin / kRmin80 - 1.0) < 0.001);
    auto side = mc::geometry_of(1.0, g90);
    CHECK(side.off_axis_rad == doctest::Approx(off_axis_angle(side.distance_km, g90)).epsilon(1e-12));
}
