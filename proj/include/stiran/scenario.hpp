#pragma once

#include <string_view>

#include "stiran/channel.hpp"
#include "stiran/geometry.hpp"

namespace stiran {

enum class FrequencyMode { Distinct, Shared };

std::string_view to_string(FrequencyMode mode);

/// Association biases and transmit powers (linear, watts).
struct BiasConfig {
    double rho_sat = 1.0;
    double rho_bs = 1.0;
    double p_t_sat_w = 0.0;
    double p_t_bs_w = 0.0;
};

/// Receiver noise: sigma^2 = N + 10 log10(B) + NF, in dBm, held in watts.
struct NoiseModel {
    double bandwidth_hz = 0.0;
    double noise_psd_dbm_hz = 0.0;
    double noise_figure_db = 0.0;
    double sigma2_w = 0.0;

    static NoiseModel make(double bandwidth_hz, double noise_psd_dbm_hz, double noise_figure_db);
};

struct SatNetworkParams {
    double lambda_sat = 0.0;  // satellites per km of orbit
    OrbitGeometry geom;
    VisibleCap cap;

    static SatNetworkParams make(double lambda_sat, const OrbitGeometry& geom);

    double visible_arc_km() const;
};

struct BsNetworkParams {
    double lambda_bs = 0.0;  // base stations per km^2
    double hole_radius_km = 0.0;
};

/// Everything the analytic model and the simulator need, in linear units.
struct Scenario {
    OrbitGeometry geom;
    ChannelParams channel;
    AntennaPattern pattern;
    NoiseModel noise;
    BiasConfig bias;
    double lambda_sat = 0.0;
    double lambda_bs = 0.0;
    double hole_radius_km = 0.0;
    /// Path gain is (r / ref)^-alpha; distances stay in km.
    double pathloss_ref_km = 1e-3;

    VisibleCap cap() const { return visible_cap(geom); }
    SatNetworkParams sat() const;
    BsNetworkParams bs() const;

    /// G(psi(r)) (r / ref)^-alpha_sat, linear.
    double sat_link_gain(double r_km) const;
    double sat_link_gain(double r_km, GainBranch branch) const;
    /// (r / ref)^-alpha_bs.
    double bs_link_gain(double r_km) const;

    /// Validates the assembled scenario; throws InvalidArgument.
    void validate() const;

    /// Baseline parameter set used throughout the tests and default configs.
    static Scenario baseline(double hole_radius_km = 0.1);
};

}  // namespace stiran
