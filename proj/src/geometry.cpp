#include "stiran/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stiran/errors.hpp"

namespace stiran {

namespace {

constexpr double kCosineSlack = 1e-12;

}  // namespace

OrbitGeometry OrbitGeometry::make(double earth_radius_km, double orbit_altitude_km,
                                  double polar_angle_rad, double min_elevation_rad,
                                  double azimuth_rad) {
    if (!(earth_radius_km > 0.0)) {
        throw InvalidArgument("earth radius must be positive, got " + std::to_string(earth_radius_km));
    }
    if (!(orbit_altitude_km > 0.0)) {
        throw InvalidArgument("orbit altitude must be positive, got " + std::to_string(orbit_altitude_km));
    }
    if (!(polar_angle_rad >= 0.0 && polar_angle_rad <= std::numbers::pi)) {
        throw InvalidArgument("polar angle must lie in [0, pi]");
    }
    if (!(min_elevation_rad >= 0.0 && min_elevation_rad <= std::numbers::pi / 2)) {
        throw InvalidArgument("minimum elevation must lie in [0, pi/2]");
    }
    OrbitGeometry g;
    g.earth_radius_km = earth_radius_km;
    g.orbit_altitude_km = orbit_altitude_km;
    g.orbit_radius_km = earth_radius_km + orbit_altitude_km;
    g.polar_angle_rad = polar_angle_rad;
    g.min_elevation_rad = min_elevation_rad;
    g.azimuth_rad = azimuth_rad;
    return g;
}

SlantRange slant_range_bounds(const OrbitGeometry& geom) {
    const double re = geom.earth_radius_km;
    const double rh = geom.orbit_altitude_km;
    const double r = geom.orbit_radius_km;
    const double sin_w = std::sin(geom.min_elevation_rad);

    SlantRange out;
    out.r_max_km = -re * sin_w + std::sqrt(re * re * sin_w * sin_w + 2.0 * re * rh + rh * rh);
    const double r_min_sq = r * r - 2.0 * re * r * std::sin(geom.polar_angle_rad) + re * re;
    out.r_min_km = std::sqrt(std::max(r_min_sq, 0.0));
    return out;
}

VisibleCap visible_cap(const OrbitGeometry& geom) {
    const SlantRange sr = slant_range_bounds(geom);
    VisibleCap cap;
    cap.r_min_km = sr.r_min_km;
    cap.r_max_km = sr.r_max_km;
    cap.cap_base_km = sr.r_max_km * std::sin(geom.min_elevation_rad) + geom.earth_radius_km;
    // At 90 degrees elevation the cap degenerates onto the zenith point.
    cap.cap_base_km = std::min(cap.cap_base_km, geom.orbit_radius_km);
    return cap;
}

double eta(double orbit_radius_km, double polar_angle_rad, double cap_base_km) {
    const double s = std::sin(polar_angle_rad);
    if (std::abs(s) < 1e-15) {
        throw DegenerateOrbit("eta undefined for sin(theta) == 0");
    }
    const double ratio = cap_base_km / (orbit_radius_km * s);
    return 2.0 * ratio * ratio - 1.0;
}

double clamp_cosine(double c) {
    if (c > 1.0 + kCosineSlack || c < -1.0 - kCosineSlack || std::isnan(c)) {
        throw NumericalError("cosine argument " + std::to_string(c) + " outside [-1, 1]");
    }
    return std::clamp(c, -1.0, 1.0);
}

double visible_arc_length(double orbit_radius_km, double polar_angle_rad, double cap_base_km) {
    const double top = orbit_radius_km * std::sin(polar_angle_rad);
    if (!(top > 0.0) || top <= cap_base_km) {
        return 0.0;
    }
    const double c = std::max(cap_base_km / top, -1.0);
    return 2.0 * orbit_radius_km * std::acos(c);
}

double off_axis_angle(double r_km, const OrbitGeometry& geom) {
    if (!(r_km > 0.0)) {
        throw InvalidDistance("off-axis angle needs a positive distance, got " + std::to_string(r_km));
    }
    const double R = geom.orbit_radius_km;
    const double re = geom.earth_radius_km;
    const double c = (R * R + r_km * r_km - re * re) / (2.0 * R * r_km);
    return std::acos(std::clamp(c, -1.0, 1.0));
}

double cap_base_for_distance(double r_km, const OrbitGeometry& geom) {
    const double R = geom.orbit_radius_km;
    const double re = geom.earth_radius_km;
    return (R * R + re * re - r_km * r_km) / (2.0 * re);
}

double distance_at_orbit_angle(double t_rad, const OrbitGeometry& geom) {
    const double R = geom.orbit_radius_km;
    const double re = geom.earth_radius_km;
    const double d2 = R * R + re * re - 2.0 * re * R * std::sin(geom.polar_angle_rad) * std::cos(t_rad);
    return std::sqrt(std::max(d2, 0.0));
}

double orbit_angle_at_distance(double r_km, const OrbitGeometry& geom) {
    const double top = geom.orbit_radius_km * std::sin(geom.polar_angle_rad);
    if (!(top > 0.0)) {
        return 0.0;
    }
    const double c = cap_base_for_distance(r_km, geom) / top;
    return std::acos(std::clamp(c, -1.0, 1.0));
}

double distance_at_off_axis(double psi_rad, const OrbitGeometry& geom) {
    const double R = geom.orbit_radius_km;
    const double re = geom.earth_radius_km;
    const double c = std::cos(psi_rad);
    const double disc = R * R * c * c - (R * R - re * re);
    if (disc < 0.0 || c <= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    // (R c)^2 - disc = R^2 - R_E^2; the product form avoids cancellation near psi = 0.
    return (R * R - re * re) / (R * c + std::sqrt(disc));
}

}  // namespace stiran
