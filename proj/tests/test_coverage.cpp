#include "doctest.h"

#include <cmath>
#include <numbers>

#include "stiran/association.hpp"
#include "stiran/coverage.hpp"
#include "stiran/errors.hpp"
#include "stiran/quadrature.hpp"
#include "stiran/montecarlo.hpp"

using namespace stiran;

namespace {
std::vector<double> grid() {
    std::vector<double> g;
    for (double db = -10; db <= 20; db += 5) g.push_back(db_to_linear(db));
    return g;
}
}  // namespace

TEST_CASE("Laplace transforms are 1 at s = 0 and nonincreasing") {
    auto sc = Scenario::baseline();
    CHECK(laplace_interference_sat(0.0, 800.0, sc) == 1.0);
    CHECK(laplace_interference_bs(0.0, 0.3, sc) == 1.0);
    double prev_s = 1.0, prev_b = 1.0;
    for (double e = -14; e <= 16; e += 0.5) {
        const double s = std::pow(10.0, e);
        const double ls = laplace_interference_sat(s, 800.0, sc);
        const double lb = laplace_interference_bs(s, 0.3, sc);
        CHECK(ls <= prev_s + 1e-12);
        CHECK(lb <= prev_b + 1e-12);
        CHECK(ls >= 0.0);
        prev_s = ls;
        prev_b = lb;
    }
    // no interferers beyond r_max
    CHECK(laplace_interference_sat(1e12, sc.cap().r_max_km, sc) == doctest::Approx(1.0));
}

TEST_CASE("BS interference integral") {
    auto sc = Scenario::baseline();
    for (double a : {0.0, 0.01, 0.1, 1.0, 5.0}) {
        for (double s : {1e6, 1e10, 1e12, 1e14}) {
            const double q = bs_interference_integral(s, a, sc, Tolerance{0.0, 1e-12});
            CHECK(q == doctest::Approx(bs_interference_integral_alpha4(s, a, sc)).epsilon(1e-9));
        }
    }
    // a = 0 closed form against a direct evaluation for alpha = 3
    auto s3 = sc;
    s3.channel.alpha_bs = 3.0;
    const double s = 1e10;
    const double c = s * s3.bias.p_t_bs_w * std::pow(s3.pathloss_ref_km, 3.0);
    const double direct = integrate([&](double u) { return u / (1.0 + u * u * u / c); }, 0.0, 1e-6, Tolerance{0, 1e-12}) +
                          bs_interference_integral(s, 1e-6, s3, Tolerance{0, 1e-12});
    CHECK(bs_interference_integral(s, 0.0, s3) == doctest::Approx(direct).epsilon(1e-8));
    CHECK_THROWS_AS(bs_interference_integral_alpha4(s, 0.1, s3), InvalidArgument);
    CHECK(bs_interference_integral(0.0, 0.1, sc) == 0.0);
}

TEST_CASE("distinct-frequency total combines the branches") {
    auto sc = Scenario::baseline(0.1);
    const CoverageQuery q{1.0, FrequencyMode::Distinct, sc, {}};
    auto r = cov_distinct_total(q);
    const double sat = cov_distinct_sat(q);
    const double bs = cov_distinct_bs(q);
    CHECK(r.total == doctest::Approx(1.0 - (1.0 - sat) * (1.0 - bs)));
    CHECK(r.branches.sat_conditional == doctest::Approx(sat / r.p_vis));
    CHECK(r.branches.bs_conditional == doctest::Approx(bs));
    CHECK(r.total >= bs);
}

TEST_CASE("shared-frequency total combines the branches") {
    auto sc = Scenario::baseline(0.7);
    const CoverageQuery q{1.0, FrequencyMode::Shared, sc, {}};
    auto r = coverage(q);
    const auto& b = r.branches;
    CHECK(r.total == doctest::Approx(r.p_vis * (b.assoc_sat * b.sat_conditional + b.assoc_bs * b.bs_conditional) +
                                     (1.0 - r.p_vis) * b.invis_bs));
    CHECK(b.invis_bs == doctest::Approx(cov_distinct_bs(q)));
    CHECK(cov_shared_sat(q) == doctest::Approx(b.sat_conditional));
    CHECK(cov_shared_bs(q) == doctest::Approx(b.bs_conditional));
}

TEST_CASE("curves are monotone in the threshold and within [0, 1]") {
    for (auto mode : {FrequencyMode::Distinct, FrequencyMode::Shared}) {
        auto c = coverage_curve(Scenario::baseline(0.1), mode, grid());
        for (std::size_t i = 0; i < c.size(); ++i) {
            CHECK(c[i].total >= 0.0);
            CHECK(c[i].total <= 1.0);
            if (i) CHECK(c[i].total <= c[i - 1].total);
        }
    }
}

TEST_CASE("trivial limits") {
    auto sc = Scenario::baseline();
    // tiny threshold: covered whenever a station is present
    CHECK(coverage({1e-9, FrequencyMode::Distinct, sc, {}}).total == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(coverage({1e-9, FrequencyMode::Shared, sc, {}}).total == doctest::Approx(1.0).epsilon(1e-4));
    // overwhelming noise
    auto loud = sc;
    loud.noise.sigma2_w = 1e3;
    CHECK(coverage({1.0, FrequencyMode::Distinct, loud, {}}).total < 1e-6);
    CHECK(coverage({1.0, FrequencyMode::Shared, loud, {}}).total < 1e-6);
    CHECK_THROWS_AS(coverage({0.0, FrequencyMode::Shared, sc, {}}), InvalidArgument);
    // invisible orbit: shared mode reduces to the terrestrial tier
    auto dark = sc;
    dark.geom = OrbitGeometry::make(6371.0, 500.0, 70.0 * std::numbers::pi / 180.0, 10.0 * std::numbers::pi / 180.0);
    const CoverageQuery qd{1.0, FrequencyMode::Shared, dark, {}};
    CHECK(coverage(qd).total == doctest::Approx(cov_distinct_bs(qd)));
}

TEST_CASE("shared limits as one tier vanishes") {
    for (double r0 : {0.1, 0.7}) {
        auto no_bs = Scenario::baseline(r0);
        no_bs.lambda_bs = 1e-9;
        auto no_sat = Scenario::baseline(r0);
        no_sat.lambda_sat = 1e-9;
        for (double g : grid()) {
            CHECK(coverage({g, FrequencyMode::Shared, no_bs, {}}).total ==
                  doctest::Approx(cov_distinct_sat({g, FrequencyMode::Distinct, no_bs, {}})).epsilon(1e-3));
            CHECK(coverage({g, FrequencyMode::Shared, no_sat, {}}).total ==
                  doctest::Approx(cov_distinct_bs({g, FrequencyMode::Distinct, no_sat, {}})).epsilon(1e-3));
        }
    }
}

TEST_CASE("analytic coverage agrees with simulation") {
    auto sc = Scenario::baseline(0.7);
    mc::McOptions o;
    o.trials = 8000;
    o.seed = 11;
    auto sim = mc::estimate_coverage_curves(sc, grid(), o);
    auto dist = coverage_curve(sc, FrequencyMode::Distinct, grid());
    auto shared = coverage_curve(sc, FrequencyMode::Shared, grid());
    for (std::size_t i = 0; i < grid().size(); ++i) {
        CHECK(std::abs(sim.points[i].distinct.value - dist[i].total) < 0.03);
        CHECK(std::abs(sim.points[i].shared.value - shared[i].total) < 0.03);
    }
    CHECK(std::abs(sim.p_vis.value - dist[0].p_vis) < 0.01);
}

TEST_CASE("satellite Laplace transform agrees with simulation") {
    auto sc = Scenario::baseline();
    for (double r : {600.0, 1000.0, 1400.0}) {
        const double s = 1.0 / (sc.bias.p_t_sat_w * sc.sat_link_gain(r));
        CHECK(std::abs(mc::estimate_laplace_sat(s, r, sc, 20000, 5) - laplace_interference_sat(s, r, sc)) < 0.01);
    }
}
