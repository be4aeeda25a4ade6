#include "stiran/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "stiran/errors.hpp"

namespace stiran {

namespace {

constexpr double kSupportSlack = 1e-9;

double clamp_to_support(double r_km, double lo, double hi, const char* what) {
    const double slack = kSupportSlack * std::max(1.0, hi);
    if (r_km < lo - slack || r_km > hi + slack || std::isnan(r_km)) {
        throw OutOfSupport(std::string(what) + ": distance " + std::to_string(r_km) + " km outside [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return std::clamp(r_km, lo, hi);
}

double sin_theta(const SatNetworkParams& sat) { return std::sin(sat.geom.polar_angle_rad); }

}  // namespace

double visibility_probability(const SatNetworkParams& sat) {
    return -std::expm1(-sat.lambda_sat * sat.visible_arc_km());
}

double visible_orbit_angle(const SatNetworkParams& sat) {
    return 0.5 * sat.visible_arc_km() / sat.geom.orbit_radius_km;
}

double nearest_sat_ccdf(double r_km, const SatNetworkParams& sat) {
    const double r = clamp_to_support(r_km, sat.cap.r_min_km, sat.cap.r_max_km, "nearest_sat_ccdf");
    const double k = 2.0 * sat.lambda_sat * sat.geom.orbit_radius_km;
    const double t_a = visible_orbit_angle(sat);
    if (!(k * t_a > 0.0)) {
        throw OutOfSupport("nearest_sat_ccdf: no satellite can be visible");
    }
    const double t = std::min(orbit_angle_at_distance(r, sat.geom), t_a);
    // (e^{-kt} - e^{-k t_A}) / (1 - e^{-k t_A}) written to keep precision near both ends.
    return std::exp(-k * t) * -std::expm1(-k * (t_a - t)) / -std::expm1(-k * t_a);
}

double nearest_sat_pdf(double r_km, const SatNetworkParams& sat) {
    const double r = clamp_to_support(r_km, sat.cap.r_min_km, sat.cap.r_max_km, "nearest_sat_pdf");
    if (r <= sat.cap.r_min_km || r >= sat.cap.r_max_km) {
        return 0.0;
    }
    const double t = orbit_angle_at_distance(r, sat.geom);
    const double sin_t = std::sin(t);
    if (!(sin_t > 0.0)) {
        return 0.0;
    }
    const double dt_dr = r / (sat.geom.earth_radius_km * sat.geom.orbit_radius_km * sin_theta(sat) * sin_t);
    return nearest_sat_pdf_angle(t, sat) * dt_dr;
}

double nearest_sat_pdf_angle(double t_rad, const SatNetworkParams& sat) {
    const double t_a = visible_orbit_angle(sat);
    if (t_rad < 0.0 || t_rad > t_a) {
        return 0.0;
    }
    const double k = 2.0 * sat.lambda_sat * sat.geom.orbit_radius_km;
    const double p_vis = -std::expm1(-k * t_a);
    if (!(p_vis > 0.0)) {
        return 0.0;
    }
    return k * std::exp(-k * t_rad) / p_vis;
}

double sat_void_probability(double r_km, const SatNetworkParams& sat) {
    const double t_a = visible_orbit_angle(sat);
    const double t = std::min(orbit_angle_at_distance(r_km, sat.geom), t_a);
    return std::exp(-2.0 * sat.lambda_sat * sat.geom.orbit_radius_km * t);
}

double nearest_bs_ccdf(double r_km, const BsNetworkParams& bs) {
    if (r_km < bs.hole_radius_km || std::isnan(r_km)) {
        throw OutOfSupport("nearest_bs_ccdf: distance " + std::to_string(r_km) + " km inside the coverage hole");
    }
    const double r0 = bs.hole_radius_km;
    return std::exp(-std::numbers::pi * bs.lambda_bs * (r_km - r0) * (r_km + r0));
}

double nearest_bs_pdf(double r_km, const BsNetworkParams& bs) {
    return 2.0 * std::numbers::pi * bs.lambda_bs * r_km * nearest_bs_ccdf(r_km, bs);
}

double bs_integration_limit(const BsNetworkParams& bs) {
    if (!(bs.lambda_bs > 0.0)) {
        return bs.hole_radius_km;
    }
    const double r0 = bs.hole_radius_km;
    const double spread = r0 + 10.0 / std::sqrt(bs.lambda_bs);
    // Radius where the density has dropped to 1e-12 of its value at the hole edge.
    const double tail = std::sqrt(r0 * r0 + 12.0 * std::log(10.0) / (std::numbers::pi * bs.lambda_bs));
    return std::max(spread, tail);
}

std::vector<double> bs_integration_breaks(const BsNetworkParams& bs, const std::vector<double>& extra) {
    const double lo = bs.hole_radius_km;
    const double hi = bs_integration_limit(bs);
    std::vector<double> out{lo, hi};
    if (!(hi > lo)) {
        return out;
    }
    // Doubling offsets from 10 m (or a small fraction of the mean spacing,
    // whichever is smaller) out to the limit.
    const double scale = 1.0 / std::sqrt(bs.lambda_bs);
    for (double step = std::min(0.01, scale / 64.0); lo + step < hi; step *= 2.0) {
        out.push_back(lo + step);
    }
    for (double x : extra) {
        if (x > lo && x < hi) {
            out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace stiran
