#include "stiran/association.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include <boost/math/tools/roots.hpp>

#include "stiran/distributions.hpp"
#include "stiran/errors.hpp"

namespace stiran {

namespace {

constexpr double kRootTolKm = 1e-9;

double h_bar(const Scenario& sc) { return mean_sat_fading(sc.channel); }

double sat_prefactor(const Scenario& sc) { return sc.bias.rho_sat * sc.bias.p_t_sat_w * h_bar(sc); }

void check_support(double r_km, const VisibleCap& cap, const char* what) {
    const double slack = 1e-9 * std::max(1.0, cap.r_max_km);
    if (!(r_km >= cap.r_min_km - slack && r_km <= cap.r_max_km + slack)) {
        throw OutOfSupport(std::string(what) + ": distance " + std::to_string(r_km) + " km outside the visible support");
    }
}

}  // namespace

double biased_mean_power_sat(double r_km, const Scenario& sc) {
    const VisibleCap cap = sc.cap();
    check_support(r_km, cap, "biased_mean_power_sat");
    return sat_prefactor(sc) * sc.sat_link_gain(std::clamp(r_km, cap.r_min_km, cap.r_max_km));
}

double biased_power_bs(double r_km, const Scenario& sc) {
    if (!(r_km > 0.0)) {
        throw InvalidDistance("biased_power_bs needs a positive distance");
    }
    return sc.bias.rho_bs * sc.bias.p_t_bs_w * sc.bs_link_gain(r_km);
}

double bs_distance_at_power(double power, const Scenario& sc) {
    if (!(power > 0.0)) {
        return std::numeric_limits<double>::infinity();
    }
    return sc.pathloss_ref_km * std::pow(sc.bias.rho_bs * sc.bias.p_t_bs_w / power, 1.0 / sc.channel.alpha_bs);
}

SatPowerProfile::SatPowerProfile(const Scenario& sc) : sc_(sc) {
    const VisibleCap cap = sc.cap();
    if (!cap.orbit_visible()) {
        return;
    }
    std::vector<double> cuts{cap.r_min_km};
    for (GainBranch b : {GainBranch::NearIn, GainBranch::SideLobe, GainBranch::FarOut}) {
        const double r = distance_at_off_axis(sc.pattern.branch_start(b), sc.geom);
        if (r > cap.r_min_km && r < cap.r_max_km) {
            cuts.push_back(r);
        }
    }
    cuts.push_back(cap.r_max_km);
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        Panel p;
        p.r_lo = cuts[i];
        p.r_hi = cuts[i + 1];
        const double mid = 0.5 * (p.r_lo + p.r_hi);
        p.branch = sc.pattern.branch_at(off_axis_angle(mid, sc.geom));
        p.g_at_lo = g_on(p, p.r_lo);
        p.g_at_hi = g_on(p, p.r_hi);
        panels_.push_back(p);
    }
}

double SatPowerProfile::g_on(const Panel& p, double r_km) const {
    return sat_prefactor(sc_) * sc_.sat_link_gain(r_km, p.branch);
}

double SatPowerProfile::g(double r_km) const {
    for (const Panel& p : panels_) {
        if (r_km < p.r_hi) {
            return g_on(p, std::max(r_km, p.r_lo));
        }
    }
    if (panels_.empty()) {
        throw OutOfSupport("satellite power profile is empty: orbit not visible");
    }
    return g_on(panels_.back(), std::min(r_km, panels_.back().r_hi));
}

double SatPowerProfile::max_power() const {
    double m = 0.0;
    for (const Panel& p : panels_) m = std::max(m, p.g_at_lo);
    return m;
}

double SatPowerProfile::min_power() const {
    double m = std::numeric_limits<double>::infinity();
    for (const Panel& p : panels_) m = std::min(m, p.g_at_hi);
    return m;
}

double SatPowerProfile::solve_on(const Panel& p, double power) const {
    const double target = std::log(power);
    auto f = [&](double r) { return std::log(g_on(p, r)) - target; };
    auto done = [](double a, double b) { return std::abs(b - a) < kRootTolKm; };
    std::uintmax_t iters = 200;
    const auto bracket = boost::math::tools::toms748_solve(f, p.r_lo, p.r_hi, done, iters);
    return 0.5 * (bracket.first + bracket.second);
}

std::vector<Interval> SatPowerProfile::weaker_set(double power) const {
    std::vector<Interval> out;
    for (const Panel& p : panels_) {
        if (p.g_at_hi >= power) {
            continue;
        }
        const double lo = p.g_at_lo < power ? p.r_lo : solve_on(p, power);
        if (!out.empty() && out.back().hi >= lo) {
            out.back().hi = p.r_hi;
        } else {
            out.push_back({lo, p.r_hi});
        }
    }
    return out;
}

std::vector<double> SatPowerProfile::crossings(double power) const {
    std::vector<double> out;
    for (const Panel& p : panels_) {
        if (p.g_at_lo > power && p.g_at_hi < power) {
            out.push_back(solve_on(p, power));
        }
    }
    return out;
}

std::vector<double> SatPowerProfile::boundaries() const {
    std::vector<double> out;
    for (const Panel& p : panels_) out.push_back(p.r_lo);
    if (!panels_.empty()) out.push_back(panels_.back().r_hi);
    return out;
}

AssociationThresholds solve_thresholds(const Scenario& sc) {
    const SatPowerProfile prof(sc);
    if (prof.panels().empty()) {
        throw InvalidArgument("association thresholds need a visible orbit");
    }
    const VisibleCap cap = sc.cap();
    AssociationThresholds t;
    const double bs_at_hole = sc.hole_radius_km > 0.0 ? biased_power_bs(sc.hole_radius_km, sc)
                                                      : std::numeric_limits<double>::infinity();
    const std::vector<Interval> weak = prof.weaker_set(bs_at_hole);
    if (weak.empty()) {
        t.r1_km = cap.r_max_km;
        t.r1_branch = ThresholdBranch::AboveSupport;
    } else if (weak.front().lo <= cap.r_min_km) {
        t.r1_km = cap.r_min_km;
        t.r1_branch = ThresholdBranch::BelowSupport;
    } else {
        t.r1_km = weak.front().lo;
    }
    t.r2_km = bs_distance_at_power(prof.panels().front().g_at_lo, sc);
    t.r3_km = bs_distance_at_power(prof.panels().back().g_at_hi, sc);
    t.r_always_km = bs_distance_at_power(prof.max_power(), sc);
    t.r_never_km = bs_distance_at_power(prof.min_power(), sc);
    return t;
}

Association::Association(const Scenario& sc, Tolerance tol)
    : sc_(sc), sat_(sc.sat()), profile_(sc), thr_{} {
    p_vis_ = visibility_probability(sat_);
    if (!(p_vis_ > 0.0)) {
        throw InvalidArgument("association is conditional on a visible satellite; visibility probability is 0");
    }
    t_a_ = visible_orbit_angle(sat_);
    thr_ = solve_thresholds(sc_);

    p_sat_ = integrate_panels([&](double t) { return sat_wins(distance_at_orbit_angle(t, sc_.geom)) *
                                                     nearest_sat_pdf_angle(t, sat_); },
                              sat_angle_breaks(), tol, "association probability (satellite)")
                 .value;

    const double r0 = sc_.hole_radius_km;
    const double hi = bs_upper();
    if (hi > r0) {
        p_bs_ = integrate_panels([&](double r) { return prob_sat_weaker(biased_power_bs(r, sc_)) *
                                                        nearest_bs_pdf(r, sc_.bs()); },
                                 bs_breaks(), tol, "association probability (BS)")
                    .value;
    }
    // quadrature error can push either value a hair outside [0, 1]
    p_sat_ = std::clamp(p_sat_, 0.0, 1.0);
    p_bs_ = std::clamp(p_bs_, 0.0, 1.0);
}

double Association::bs_exclusion(double r_sat_km) const {
    return std::max(bs_distance_at_power(profile_.g(r_sat_km), sc_), sc_.hole_radius_km);
}

double Association::sat_wins(double r_sat_km) const {
    const double r0 = sc_.hole_radius_km;
    const double d1 = bs_exclusion(r_sat_km);
    return std::exp(-std::numbers::pi * sc_.lambda_bs * (d1 - r0) * (d1 + r0));
}

double Association::prob_sat_weaker(double power) const {
    double p = 0.0;
    for (const Interval& iv : profile_.weaker_set(power)) {
        p += nearest_sat_ccdf(iv.lo, sat_) - nearest_sat_ccdf(iv.hi, sat_);
    }
    return std::clamp(p, 0.0, 1.0);
}

double Association::d2(double power) const {
    const std::vector<Interval> w = profile_.weaker_set(power);
    return w.empty() ? sat_.cap.r_max_km : w.front().lo;
}

double Association::serving_sat_pdf(double r_km) const {
    if (!(p_sat_ > 0.0)) return 0.0;
    return sat_wins(std::clamp(r_km, sat_.cap.r_min_km, sat_.cap.r_max_km)) * nearest_sat_pdf(r_km, sat_) / p_sat_;
}

double Association::serving_sat_pdf_angle(double t_rad) const {
    if (!(p_sat_ > 0.0) || t_rad < 0.0 || t_rad > t_a_) return 0.0;
    return sat_wins(distance_at_orbit_angle(t_rad, sc_.geom)) * nearest_sat_pdf_angle(t_rad, sat_) / p_sat_;
}

double Association::serving_bs_pdf(double r_km) const {
    if (!(p_bs_ > 0.0)) return 0.0;
    if (r_km < sc_.hole_radius_km) {
        throw OutOfSupport("serving BS distance inside the coverage hole");
    }
    return prob_sat_weaker(biased_power_bs(r_km, sc_)) * nearest_bs_pdf(r_km, sc_.bs()) / p_bs_;
}

std::vector<double> Association::sat_angle_breaks() const {
    std::vector<double> rs = profile_.boundaries();
    if (sc_.hole_radius_km > 0.0) {
        for (double r : profile_.crossings(biased_power_bs(sc_.hole_radius_km, sc_))) rs.push_back(r);
    }
    std::vector<double> ts{0.0, t_a_};
    for (double r : rs) ts.push_back(std::min(orbit_angle_at_distance(r, sc_.geom), t_a_));
    for (int k = 1; k < 8; ++k) ts.push_back(t_a_ * k / 8.0);
    return panel_breaks(0.0, t_a_, ts);
}

double Association::bs_upper() const {
    return std::max(sc_.hole_radius_km, std::min(thr_.r_never_km, bs_integration_limit(sc_.bs())));
}

std::vector<double> Association::bs_breaks() const {
    std::vector<double> extra{thr_.r_always_km, thr_.r_never_km};
    for (const auto& p : profile_.panels()) {
        extra.push_back(bs_distance_at_power(p.g_at_lo, sc_));
        extra.push_back(bs_distance_at_power(p.g_at_hi, sc_));
    }
    std::vector<double> all = bs_integration_breaks(sc_.bs(), extra);
    return panel_breaks(sc_.hole_radius_km, bs_upper(), all);
}

double assoc_prob_sat(const Scenario& sc) { return Association(sc).p_sat(); }
double assoc_prob_bs(const Scenario& sc) { return Association(sc).p_bs(); }
double serving_sat_distance_pdf(double r_km, const Scenario& sc) { return Association(sc).serving_sat_pdf(r_km); }
double serving_bs_distance_pdf(double r_km, const Scenario& sc) { return Association(sc).serving_bs_pdf(r_km); }

}  // namespace stiran
