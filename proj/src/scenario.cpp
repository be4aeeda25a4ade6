#include "stiran/scenario.hpp"

#include <cmath>
#include <numbers>

#include "stiran/errors.hpp"

namespace stiran {

std::string_view to_string(FrequencyMode mode) {
    return mode == FrequencyMode::Distinct ? "distinct" : "shared";
}

NoiseModel NoiseModel::make(double bandwidth_hz, double noise_psd_dbm_hz, double noise_figure_db) {
    if (!(bandwidth_hz > 0.0)) {
        throw InvalidArgument("noise bandwidth must be positive");
    }
    NoiseModel n;
    n.bandwidth_hz = bandwidth_hz;
    n.noise_psd_dbm_hz = noise_psd_dbm_hz;
    n.noise_figure_db = noise_figure_db;
    n.sigma2_w = dbm_to_watts(noise_psd_dbm_hz + 10.0 * std::log10(bandwidth_hz) + noise_figure_db);
    return n;
}

SatNetworkParams SatNetworkParams::make(double lambda_sat, const OrbitGeometry& geom) {
    if (!(lambda_sat >= 0.0)) {
        throw InvalidArgument("satellite density must be nonnegative");
    }
    return SatNetworkParams{lambda_sat, geom, visible_cap(geom)};
}

double SatNetworkParams::visible_arc_km() const {
    return visible_arc_length(geom.orbit_radius_km, geom.polar_angle_rad, cap.cap_base_km);
}

SatNetworkParams Scenario::sat() const { return SatNetworkParams{lambda_sat, geom, visible_cap(geom)}; }

BsNetworkParams Scenario::bs() const { return BsNetworkParams{lambda_bs, hole_radius_km}; }

double Scenario::sat_link_gain(double r_km) const {
    const double psi = off_axis_angle(r_km, geom);
    return antenna_gain_linear(psi, pattern) * std::pow(r_km / pathloss_ref_km, -channel.alpha_sat);
}

double Scenario::sat_link_gain(double r_km, GainBranch branch) const {
    const double psi = off_axis_angle(r_km, geom);
    return antenna_gain_linear(psi, pattern, branch) * std::pow(r_km / pathloss_ref_km, -channel.alpha_sat);
}

double Scenario::bs_link_gain(double r_km) const { return std::pow(r_km / pathloss_ref_km, -channel.alpha_bs); }

void Scenario::validate() const {
    if (!(lambda_sat >= 0.0)) throw InvalidArgument("satellite density must be nonnegative");
    if (!(lambda_bs >= 0.0)) throw InvalidArgument("BS density must be nonnegative");
    if (!(hole_radius_km >= 0.0)) throw InvalidArgument("coverage hole radius must be nonnegative");
    if (!(pathloss_ref_km > 0.0)) throw InvalidArgument("path-loss reference distance must be positive");
    if (!(bias.rho_sat > 0.0 && bias.rho_bs > 0.0)) throw InvalidArgument("bias factors must be positive");
    if (!(bias.p_t_sat_w > 0.0 && bias.p_t_bs_w > 0.0)) throw InvalidArgument("transmit powers must be positive");
    if (!(noise.sigma2_w > 0.0)) throw InvalidArgument("noise power must be positive");
}

Scenario Scenario::baseline(double hole_radius_km) {
    constexpr double deg = std::numbers::pi / 180.0;
    Scenario s;
    s.geom = OrbitGeometry::make(6371.0, 500.0, 90.0 * deg, 10.0 * deg);
    s.channel = ChannelParams::make(0.063, 0.739, 8.97e-4, 2.0, 4.0);
    s.pattern = AntennaPattern::make(35.0, -6.75, 5.0, 1.6 * deg);
    s.noise = NoiseModel::make(5e6, -174.0, 11.0);
    s.bias = BiasConfig{1.0, 1.0, dbm_to_watts(45.0), dbm_to_watts(40.0)};
    s.lambda_sat = 0.001;
    s.lambda_bs = 1.0;
    s.hole_radius_km = hole_radius_km;
    s.pathloss_ref_km = 1e-3;
    return s;
}

}  // namespace stiran
