#include "doctest.h"

#include <cmath>
#include <numbers>

#include "stiran/channel.hpp"
#include "stiran/errors.hpp"
#include "stiran/scenario.hpp"

using namespace stiran;

namespace {
constexpr double kDeg = std::numbers::pi / 180.0;
// mpmath
constexpr double kXi = 0.99998235301237884;
constexpr double kBeta = 0.12689923938930664;
constexpr double kZdeg = 51.311090148053570;
constexpr double kSigma2W = 2.5059361681363614e-13;
}  // namespace

TEST_CASE("decibel conversions") {
    CHECK(db_to_linear(10.0) == doctest::Approx(10.0));
    CHECK(db_to_linear(-3.0) == doctest::Approx(0.5011872336));
    CHECK(linear_to_db(100.0) == doctest::Approx(20.0));
    CHECK(dbm_to_watts(30.0) == doctest::Approx(1.0));
    CHECK(dbm_to_watts(45.0) == doctest::Approx(31.6227766));
}

TEST_CASE("gamma match of the shadowed-Rician channel") {
    auto g = sr_to_gamma(0.063, 0.739, 8.97e-4);
    CHECK(g.xi_exact == doctest::Approx(kXi).epsilon(1e-14));
    CHECK(g.beta == doctest::Approx(kBeta).epsilon(1e-14));
    CHECK(g.xi_int == 1);
    CHECK(g.a_const == 1.0);
    CHECK(g.xi_exact * g.beta == doctest::Approx(2 * 0.063 + 8.97e-4).epsilon(1e-12));

    // pure scattering, m -> any: xi = 1 when omega = 0
    auto ray = sr_to_gamma(0.5, 2.0, 0.0);
    CHECK(ray.xi_exact == doctest::Approx(1.0));
    CHECK(ray.beta == doctest::Approx(1.0));

    // strong LOS gives a larger shape and A from the integer shape
    auto los = sr_to_gamma(0.063, 5.0, 0.5);
    CHECK(los.xi_int == static_cast<int>(std::lround(los.xi_exact)));
    CHECK(los.xi_int >= 2);
    if (los.xi_int == 2) CHECK(los.a_const == doctest::Approx(std::sqrt(2.0)));
    if (los.xi_int == 3) CHECK(los.a_const == doctest::Approx(2.2255091267712069));

    CHECK_THROWS_AS(sr_to_gamma(0.0, 1.0, 1.0), InvalidChannel);
    CHECK_THROWS_AS(sr_to_gamma(0.1, -1.0, 1.0), InvalidChannel);
    CHECK_THROWS_AS(sr_to_gamma(0.1, 1.0, -1.0), InvalidChannel);
}

TEST_CASE("channel params validation") {
    CHECK_NOTHROW(ChannelParams::make(0.063, 0.739, 8.97e-4, 2.0, 4.0));
    CHECK_THROWS_AS(ChannelParams::make(0.063, 0.739, 8.97e-4, 1.5, 4.0), InvalidChannel);
    CHECK_THROWS_AS(ChannelParams::make(0.063, 0.739, 8.97e-4, 2.0, 2.0), InvalidChannel);
}

TEST_CASE("fading CCDF forms agree") {
    auto p = ChannelParams::make(0.063, 5.0, 0.5, 2.0, 4.0);
    REQUIRE(p.xi_int >= 2);
    for (double x : {0.0, 0.1, 0.5, 1.0, 3.0}) {
        CHECK(sat_fading_ccdf(x, p) == doctest::Approx(sat_fading_ccdf_binomial(x, p)).epsilon(1e-12));
    }
    CHECK(sat_fading_ccdf(0.0, p) == 1.0);
    // xi = 1: exponential with mean beta
    auto q = ChannelParams::make(0.063, 0.739, 8.97e-4, 2.0, 4.0);
    CHECK(sat_fading_ccdf(0.2, q) == doctest::Approx(std::exp(-0.2 / q.beta)).epsilon(1e-14));
    CHECK(mean_sat_fading(q) == doctest::Approx(0.126897).epsilon(1e-12));
}

TEST_CASE("antenna mask breakpoints and branches") {
    auto a = AntennaPattern::make(35.0, -6.75, 5.0, 1.6 * kDeg);
    CHECK(a.y_rad / kDeg == doctest::Approx(2.4).epsilon(1e-14));
    CHECK(a.z_rad / kDeg == doctest::Approx(kZdeg).epsilon(1e-13));

    CHECK(a.gain_db(0.0) == 35.0);
    CHECK(a.gain_db(1.0 * kDeg) == 35.0);
    CHECK(a.gain_db(2.0 * kDeg) == doctest::Approx(35.0 - 3.0 * std::pow(2.0 / 1.6, 2)));
    CHECK(a.gain_db(10.0 * kDeg) == doctest::Approx(35.0 - 6.75 - 25.0 * std::log10(10.0 / 2.4)));
    CHECK(a.gain_db(60.0 * kDeg) == 5.0);
    CHECK(a.branch_at(0.5 * kDeg) == GainBranch::MainLobe);
    CHECK(a.branch_at(2.0 * kDeg) == GainBranch::NearIn);
    CHECK(a.branch_at(20.0 * kDeg) == GainBranch::SideLobe);
    CHECK(a.branch_at(55.0 * kDeg) == GainBranch::FarOut);

    // 3 dB drop at psi_b, continuous at Y, jump up to L_F at Z
    CHECK(a.gain_db(a.psi_b_rad) == doctest::Approx(32.0));
    CHECK(a.branch_gain_db(a.y_rad, GainBranch::NearIn) == doctest::Approx(a.branch_gain_db(a.y_rad, GainBranch::SideLobe)));
    CHECK(a.branch_gain_db(a.z_rad, GainBranch::SideLobe) == doctest::Approx(-5.0));
    CHECK(a.gain_db(a.z_rad) == 5.0);
    CHECK(a.branch_start(GainBranch::MainLobe) == 0.0);
    CHECK(a.branch_start(GainBranch::FarOut) == a.z_rad);
    CHECK(antenna_gain_linear(0.0, a) == doctest::Approx(std::pow(10.0, 3.5)));

    CHECK_THROWS_AS(AntennaPattern::make(35.0, 1.0, 5.0, 1.6 * kDeg), InvalidArgument);
    CHECK_THROWS_AS(AntennaPattern::make(35.0, -6.75, 5.0, 0.0), InvalidArgument);
}

TEST_CASE("noise power") {
    auto n = NoiseModel::make(5e6, -174.0, 11.0);
    CHECK(n.sigma2_w == doctest::Approx(kSigma2W).epsilon(1e-12));
}

TEST_CASE("baseline scenario") {
    auto sc = Scenario::baseline();
    CHECK(sc.lambda_sat == 0.001);
    CHECK(sc.lambda_bs == 1.0);
    CHECK(sc.hole_radius_km == 0.1);
    CHECK(sc.bias.p_t_sat_w == doctest::Approx(31.6227766));
    CHECK(sc.bias.p_t_bs_w == doctest::Approx(10.0));
    CHECK(sc.bs_link_gain(1.0) == doctest::Approx(1e-12));
    CHECK(sc.sat_link_gain(500.0) == doctest::Approx(std::pow(10.0, 3.5) * 4e-12));
    CHECK_NOTHROW(sc.validate());
    sc.lambda_bs = -1.0;
    CHECK_THROWS_AS(sc.validate(), InvalidArgument);
    CHECK(to_string(FrequencyMode::Shared) == "shared");
}
