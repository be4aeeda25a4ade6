#pragma once

// Visibility probability and nearest-station distance laws.
//
// Satellite integrals are easier in the orbit angle t than in the distance r:
// the nearest visible satellite has density 2 lambda R exp(-2 lambda R t) / P_vis
// on [0, t_A], which is smooth where the distance density has a 1/sqrt
// singularity at r_min.

#include <vector>

#include "stiran/scenario.hpp"

namespace stiran {

double visibility_probability(const SatNetworkParams& sat);

/// Orbit angle of the cap boundary, acos(R_A / (R sin theta)); 0 when the
/// orbit misses the cap.
double visible_orbit_angle(const SatNetworkParams& sat);

/// P(r_sat > r | at least one visible satellite). Throws OutOfSupport when r is
/// outside [r_min, r_max] by more than a relative 1e-9.
double nearest_sat_ccdf(double r_km, const SatNetworkParams& sat);

/// -d/dr of nearest_sat_ccdf; 0 at the support endpoints.
double nearest_sat_pdf(double r_km, const SatNetworkParams& sat);

/// Density of the nearest visible satellite in the orbit angle, conditional on
/// visibility.
double nearest_sat_pdf_angle(double t_rad, const SatNetworkParams& sat);

/// exp(-lambda * L(A_r)): probability of no satellite closer than r (not
/// conditioned on visibility).
double sat_void_probability(double r_km, const SatNetworkParams& sat);

double nearest_bs_ccdf(double r_km, const BsNetworkParams& bs);
double nearest_bs_pdf(double r_km, const BsNetworkParams& bs);

/// Upper limit used for integrals over the nearest-BS distance.
double bs_integration_limit(const BsNetworkParams& bs);

/// Log-spaced breakpoints on [R_0, bs_integration_limit] so that adaptive
/// quadrature sees mass concentrated near the hole edge.
std::vector<double> bs_integration_breaks(const BsNetworkParams& bs, const std::vector<double>& extra = {});

}  // namespace stiran
