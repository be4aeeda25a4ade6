#pragma once

// Geometry of a circular orbit seen from a user at (0, 0, R_E).
//
// The orbit plane passes through the Earth's centre; its normal has polar
// angle theta with respect to the user's zenith. Positions along the orbit
// are parametrised by the orbit angle t measured from the orbit's highest
// point (largest z), so the user-to-satellite distance depends on |t| only.
// All lengths are in km and all angles in radians.

namespace stiran {

struct OrbitGeometry {
    double earth_radius_km = 0.0;
    double orbit_altitude_km = 0.0;
    double orbit_radius_km = 0.0;  // earth_radius_km + orbit_altitude_km
    double polar_angle_rad = 0.0;
    double min_elevation_rad = 0.0;
    double azimuth_rad = 0.0;  // carried for completeness, no formula depends on it

    /// Throws InvalidArgument on nonpositive radii or out-of-range angles.
    static OrbitGeometry make(double earth_radius_km, double orbit_altitude_km,
                              double polar_angle_rad, double min_elevation_rad,
                              double azimuth_rad = 0.0);
};

struct SlantRange {
    double r_min_km = 0.0;
    double r_max_km = 0.0;
};

/// Spherical cap of the orbit sphere above the minimum elevation angle.
struct VisibleCap {
    double cap_base_km = 0.0;
    double r_min_km = 0.0;
    double r_max_km = 0.0;

    /// True when the orbit enters the cap (r_min < r_max).
    bool orbit_visible() const { return r_min_km < r_max_km; }
};

/// r_max is the distance to a satellite seen at the minimum elevation, r_min
/// the distance to the orbit's highest point.
SlantRange slant_range_bounds(const OrbitGeometry& geom);

VisibleCap visible_cap(const OrbitGeometry& geom);

/// Cosine of the orbit arc angle inside a cap with the given base:
/// 2 * cap_base^2 / (R^2 sin^2 theta) - 1. Throws DegenerateOrbit when
/// sin(theta) == 0.
double eta(double orbit_radius_km, double polar_angle_rad, double cap_base_km);

/// Clamps values within 1e-12 of [-1, 1] onto the interval; throws
/// NumericalError beyond that.
double clamp_cosine(double c);

/// Length of the orbit arc lying above z = cap_base_km. Zero when the orbit's
/// highest point R sin(theta) does not exceed the cap base.
double visible_arc_length(double orbit_radius_km, double polar_angle_rad, double cap_base_km);

/// Angle at the satellite between nadir and the user direction. Throws
/// InvalidDistance for r <= 0.
double off_axis_angle(double r_km, const OrbitGeometry& geom);

/// Base height of the cap whose points are all within r of the user.
double cap_base_for_distance(double r_km, const OrbitGeometry& geom);

double distance_at_orbit_angle(double t_rad, const OrbitGeometry& geom);

/// Inverse of distance_at_orbit_angle on [r_min, farthest orbit point];
/// clamped to [0, pi].
double orbit_angle_at_distance(double r_km, const OrbitGeometry& geom);

/// Near-side distance at which the off-axis angle equals psi; returns
/// +infinity when no satellite on the orbit sphere sees the user at psi.
double distance_at_off_axis(double psi_rad, const OrbitGeometry& geom);

}  // namespace stiran
