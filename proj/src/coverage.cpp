#include "stiran/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include <boost/math/special_functions/binomial.hpp>

#include "stiran/distributions.hpp"
#include "stiran/errors.hpp"

namespace stiran {

namespace {

/// Orbit angles of the antenna branch boundaries inside [0, t_A], plus a
/// uniform grid so long panels are never sampled too coarsely.
std::vector<double> sat_gain_angle_breaks(const Scenario& sc, double t_a) {
    std::vector<double> ts;
    for (GainBranch b : {GainBranch::NearIn, GainBranch::SideLobe, GainBranch::FarOut}) {
        const double r = distance_at_off_axis(sc.pattern.branch_start(b), sc.geom);
        if (std::isfinite(r)) {
            ts.push_back(orbit_angle_at_distance(r, sc.geom));
        }
    }
    for (int k = 1; k < 8; ++k) ts.push_back(t_a * k / 8.0);
    return panel_breaks(0.0, t_a, ts);
}

/// Binomial weights C(xi, q) (-1)^(q+1), q = 1..xi.
std::vector<double> binomial_weights(int xi) {
    std::vector<double> w;
    for (int q = 1; q <= xi; ++q) {
        const double c = boost::math::binomial_coefficient<double>(static_cast<unsigned>(xi), static_cast<unsigned>(q));
        w.push_back(q % 2 == 1 ? c : -c);
    }
    return w;
}

/// s for the q-th binomial term of a satellite link at distance r.
double sat_s(double gamma, int q, double r_km, const Scenario& sc) {
    const ChannelParams& ch = sc.channel;
    return q * ch.a_const * gamma / (ch.beta * sc.bias.p_t_sat_w * sc.sat_link_gain(r_km));
}

double bs_s(double gamma, double r_km, const Scenario& sc) {
    return gamma / (sc.bias.p_t_bs_w * sc.bs_link_gain(r_km));
}

double sigma2(const Scenario& sc) { return sc.noise.sigma2_w; }

/// E[exp(-s I_sat) ; nearest visible satellite beyond c], unconditioned.
double sat_void_laplace(double s, double c_km, const Scenario& sc, const SatNetworkParams& sat, Tolerance tol) {
    return sat_void_probability(c_km, sat) * laplace_interference_sat(s, c_km, sc, tol);
}

}  // namespace

double laplace_interference_sat(double s, double r_excl_km, const Scenario& sc, Tolerance tol) {
    if (!(s > 0.0) || !(sc.lambda_sat > 0.0)) {
        return 1.0;
    }
    const SatNetworkParams sat = sc.sat();
    const double t_a = visible_orbit_angle(sat);
    if (!(t_a > 0.0)) {
        return 1.0;
    }
    const double r = std::clamp(r_excl_km, sat.cap.r_min_km, sat.cap.r_max_km);
    const double t0 = std::min(orbit_angle_at_distance(r, sc.geom), t_a);
    if (t0 >= t_a) {
        return 1.0;
    }
    const double xi = sc.channel.xi_int;
    const double k = s * sc.channel.beta * sc.bias.p_t_sat_w;
    auto integrand = [&](double t) {
        const double u = distance_at_orbit_angle(t, sc.geom);
        // 1 - (1 + x)^-xi, written with expm1/log1p to stay accurate for small x.
        return -std::expm1(-xi * std::log1p(k * sc.sat_link_gain(u)));
    };
    std::vector<double> breaks = panel_breaks(t0, t_a, sat_gain_angle_breaks(sc, t_a));
    const double integral = integrate_panels(integrand, breaks, tol, "satellite interference Laplace").value;
    return std::exp(-2.0 * sc.lambda_sat * sc.geom.orbit_radius_km * integral);
}

double bs_interference_integral(double s, double a_km, const Scenario& sc, Tolerance tol) {
    if (!(s > 0.0)) {
        return 0.0;
    }
    const double alpha = sc.channel.alpha_bs;
    if (!(alpha > 2.0)) {
        throw InvalidArgument("BS interference integral diverges for alpha_bs <= 2");
    }
    const double c = s * sc.bias.p_t_bs_w * std::pow(sc.pathloss_ref_km, alpha);
    if (!(a_km > 0.0)) {
        // int_0^inf u / (1 + u^alpha / c) du = c^(2/alpha) (pi/alpha) / sin(2 pi / alpha)
        return std::pow(c, 2.0 / alpha) * (std::numbers::pi / alpha) / std::sin(2.0 * std::numbers::pi / alpha);
    }
    // u = a y^(-p), p = 1/(alpha - 2), maps [a, inf) onto (0, 1]:
    // I = p c a^(2 - alpha) int_0^1 dy / (y^(alpha p) / K + 1), K = a^alpha / c.
    // Written with 1/K so that huge a (sparse networks) cannot overflow.
    const double p = 1.0 / (alpha - 2.0);
    const double ap = alpha * p;
    const double inv_k = std::exp(std::log(c) - alpha * std::log(a_km));
    const double scale = p * std::exp(std::log(c) + (2.0 - alpha) * std::log(a_km));
    auto integrand = [&](double y) { return 1.0 / (std::pow(y, ap) * inv_k + 1.0); };
    std::vector<double> breaks{0.0, 1.0};
    // knee where y^(alpha p) = K
    const double knee = std::exp(-std::log(inv_k) / ap);
    for (double f : {0.25, 1.0, 4.0}) {
        if (knee * f < 1.0) breaks.push_back(knee * f);
    }
    // Relative accuracy is what matters downstream; scale the absolute target.
    Tolerance scaled{tol.abs / (scale + 1e-300), tol.rel};
    const double v = integrate_panels(integrand, breaks, scaled, "BS interference integral").value;
    return scale * v;
}

double bs_interference_integral_alpha4(double s, double a_km, const Scenario& sc) {
    if (sc.channel.alpha_bs != 4.0) {
        throw InvalidArgument("closed-form BS interference integral requires alpha_bs == 4");
    }
    if (!(s > 0.0)) {
        return 0.0;
    }
    const double c = s * sc.bias.p_t_bs_w * std::pow(sc.pathloss_ref_km, 4.0);
    const double rc = std::sqrt(c);
    // (sqrt(c)/2)(pi/2 - atan(a^2/sqrt(c))) = (sqrt(c)/2) atan(sqrt(c)/a^2)
    if (!(a_km > 0.0)) {
        return 0.5 * rc * std::numbers::pi / 2.0;
    }
    return 0.5 * rc * std::atan(rc / (a_km * a_km));
}

double laplace_interference_bs(double s, double r_excl_km, const Scenario& sc, Tolerance tol) {
    if (!(s > 0.0) || !(sc.lambda_bs > 0.0)) {
        return 1.0;
    }
    const double a = std::max(r_excl_km, sc.hole_radius_km);
    return std::exp(-2.0 * std::numbers::pi * sc.lambda_bs * bs_interference_integral(s, a, sc, tol));
}

double cov_distinct_sat(const CoverageQuery& q) {
    const Scenario& sc = q.scenario;
    const SatNetworkParams sat = sc.sat();
    const double p_vis = visibility_probability(sat);
    if (!(p_vis > 0.0)) {
        return 0.0;
    }
    const double t_a = visible_orbit_angle(sat);
    const double gamma = q.threshold_linear;
    const std::vector<double> w = binomial_weights(sc.channel.xi_int);
    auto integrand = [&](double t) {
        const double r = distance_at_orbit_angle(t, sc.geom);
        double acc = 0.0;
        for (int k = 1; k <= static_cast<int>(w.size()); ++k) {
            const double s = sat_s(gamma, k, r, sc);
            acc += w[k - 1] * std::exp(-s * sigma2(sc)) * laplace_interference_sat(s, r, sc, q.tol.inner());
        }
        return acc * nearest_sat_pdf_angle(t, sat);
    };
    const double c = integrate_panels(integrand, sat_gain_angle_breaks(sc, t_a), q.tol, "distinct satellite coverage").value;
    return std::clamp(p_vis * c, 0.0, 1.0);
}

double cov_distinct_bs(const CoverageQuery& q) {
    const Scenario& sc = q.scenario;
    const BsNetworkParams bs = sc.bs();
    if (!(bs.lambda_bs > 0.0)) {
        return 0.0;
    }
    const double gamma = q.threshold_linear;
    auto integrand = [&](double r) {
        const double s = bs_s(gamma, r, sc);
        return std::exp(-s * sigma2(sc)) * laplace_interference_bs(s, r, sc, q.tol.inner()) * nearest_bs_pdf(r, bs);
    };
    const double c = integrate_panels(integrand, bs_integration_breaks(bs), q.tol, "distinct BS coverage").value;
    return std::clamp(c, 0.0, 1.0);
}

CoverageResult cov_distinct_total(const CoverageQuery& q) {
    CoverageResult out;
    out.mode = FrequencyMode::Distinct;
    out.threshold_linear = q.threshold_linear;
    out.p_vis = visibility_probability(q.scenario.sat());
    const double sat = cov_distinct_sat(q);
    const double bs = cov_distinct_bs(q);
    out.branches.sat_conditional = out.p_vis > 0.0 ? sat / out.p_vis : std::numeric_limits<double>::quiet_NaN();
    out.branches.bs_conditional = bs;
    out.total = 1.0 - (1.0 - sat) * (1.0 - bs);
    return out;
}

double cov_shared_sat(const CoverageQuery& q, const Association& assoc) {
    if (!(assoc.p_sat() > 0.0)) {
        return 0.0;
    }
    const Scenario& sc = q.scenario;
    const double gamma = q.threshold_linear;
    const std::vector<double> w = binomial_weights(sc.channel.xi_int);
    auto integrand = [&](double t) {
        const double r = distance_at_orbit_angle(t, sc.geom);
        const double d1 = assoc.bs_exclusion(r);
        double acc = 0.0;
        for (int k = 1; k <= static_cast<int>(w.size()); ++k) {
            const double s = sat_s(gamma, k, r, sc);
            acc += w[k - 1] * std::exp(-s * sigma2(sc)) * laplace_interference_sat(s, r, sc, q.tol.inner()) *
                   laplace_interference_bs(s, d1, sc, q.tol.inner());
        }
        return acc * assoc.serving_sat_pdf_angle(t);
    };
    const double c = integrate_panels(integrand, assoc.sat_angle_breaks(), q.tol, "shared satellite coverage").value;
    return std::clamp(c, 0.0, 1.0);
}

double cov_shared_bs(const CoverageQuery& q, const Association& assoc) {
    if (!(assoc.p_bs() > 0.0)) {
        return 0.0;
    }
    const Scenario& sc = q.scenario;
    const SatNetworkParams sat = sc.sat();
    const BsNetworkParams bs = sc.bs();
    const double gamma = q.threshold_linear;
    auto integrand = [&](double r) {
        const double s = bs_s(gamma, r, sc);
        // Given the nearest visible satellite lies in the weaker set W, the
        // satellite tier contributes E[exp(-s I_sat); nearest in W] / P_vis,
        // which splits over the intervals of W into differences of
        // void-probability-weighted Laplace transforms.
        double sat_term = 0.0;
        for (const Interval& iv : assoc.profile().weaker_set(biased_power_bs(r, sc))) {
            sat_term += sat_void_laplace(s, iv.lo, sc, sat, q.tol.inner()) -
                        sat_void_laplace(s, iv.hi, sc, sat, q.tol.inner());
        }
        sat_term /= assoc.p_vis();
        return std::exp(-s * sigma2(sc)) * laplace_interference_bs(s, r, sc, q.tol.inner()) * sat_term *
               nearest_bs_pdf(r, bs);
    };
    const double c = integrate_panels(integrand, assoc.bs_breaks(), q.tol, "shared BS coverage").value;
    return std::clamp(c / assoc.p_bs(), 0.0, 1.0);
}

double cov_shared_sat(const CoverageQuery& q) { return cov_shared_sat(q, Association(q.scenario, q.tol)); }
double cov_shared_bs(const CoverageQuery& q) { return cov_shared_bs(q, Association(q.scenario, q.tol)); }

double cov_shared_invisible_bs(const CoverageQuery& q) { return cov_distinct_bs(q); }

namespace {

CoverageResult shared_total_with(const CoverageQuery& q, const Association* assoc) {
    CoverageResult out;
    out.mode = FrequencyMode::Shared;
    out.threshold_linear = q.threshold_linear;
    out.p_vis = assoc ? assoc->p_vis() : 0.0;
    const double invis = cov_shared_invisible_bs(q);
    out.branches.invis_bs = invis;
    if (!assoc) {
        out.total = invis;
        return out;
    }
    const double c_sat = cov_shared_sat(q, *assoc);
    const double c_bs = cov_shared_bs(q, *assoc);
    out.branches.assoc_sat = assoc->p_sat();
    out.branches.assoc_bs = assoc->p_bs();
    out.branches.sat_conditional = assoc->p_sat() > 0.0 ? c_sat : std::numeric_limits<double>::quiet_NaN();
    out.branches.bs_conditional = assoc->p_bs() > 0.0 ? c_bs : std::numeric_limits<double>::quiet_NaN();
    out.total = out.p_vis * (assoc->p_sat() * c_sat + assoc->p_bs() * c_bs) + (1.0 - out.p_vis) * invis;
    out.total = std::clamp(out.total, 0.0, 1.0);
    return out;
}

std::unique_ptr<Association> make_association(const Scenario& sc, Tolerance tol) {
    if (!(visibility_probability(sc.sat()) > 0.0)) {
        return nullptr;
    }
    return std::make_unique<Association>(sc, tol);
}

}  // namespace

CoverageResult cov_shared_total(const CoverageQuery& q) {
    const auto assoc = make_association(q.scenario, q.tol);
    return shared_total_with(q, assoc.get());
}

CoverageResult coverage(const CoverageQuery& q) {
    if (!(q.threshold_linear > 0.0)) {
        throw InvalidArgument("SINR threshold must be positive");
    }
    return q.mode == FrequencyMode::Distinct ? cov_distinct_total(q) : cov_shared_total(q);
}

std::vector<CoverageResult> coverage_curve(const Scenario& sc, FrequencyMode mode,
                                           const std::vector<double>& thresholds_linear, Tolerance tol) {
    std::vector<CoverageResult> out;
    std::unique_ptr<Association> assoc;
    if (mode == FrequencyMode::Shared) {
        assoc = make_association(sc, tol);
    }
    for (double g : thresholds_linear) {
        if (!(g > 0.0)) {
            throw InvalidArgument("SINR threshold must be positive");
        }
        const CoverageQuery q{g, mode, sc, tol};
        out.push_back(mode == FrequencyMode::Distinct ? cov_distinct_total(q) : shared_total_with(q, assoc.get()));
    }
    return out;
}

}  // namespace stiran
