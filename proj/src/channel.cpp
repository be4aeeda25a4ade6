#include "stiran/channel.hpp"

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <cmath>
#include <string>

#include "stiran/errors.hpp"

namespace stiran {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

GammaApproximation sr_to_gamma(double b, double m, double omega) {
    if (!(b > 0.0) || !(m > 0.0) || !(omega >= 0.0)) {
        throw InvalidChannel("shadowed-Rician parameters need b > 0, m > 0, omega >= 0");
    }
    const double s = 2.0 * b + omega;
    const double d = 4.0 * m * b * b + 4.0 * m * b * omega + omega * omega;
    GammaApproximation g;
    g.xi_exact = m * s * s / d;
    g.beta = d / (m * s);
    g.xi_int = std::max(1, static_cast<int>(std::lround(g.xi_exact)));
    const double fact = boost::math::factorial<double>(static_cast<unsigned>(g.xi_int));
    g.a_const = g.xi_int * std::pow(fact, -1.0 / fact);
    return g;
}

ChannelParams ChannelParams::make(double b, double m, double omega, double alpha_sat, double alpha_bs) {
    if (!(alpha_sat >= 2.0)) {
        throw InvalidChannel("satellite path-loss exponent must be >= 2");
    }
    if (!(alpha_bs > 2.0)) {
        throw InvalidChannel("terrestrial path-loss exponent must be > 2");
    }
    const GammaApproximation g = sr_to_gamma(b, m, omega);
    ChannelParams p;
    p.sr_b = b;
    p.sr_m = m;
    p.sr_omega = omega;
    p.xi_exact = g.xi_exact;
    p.xi_int = g.xi_int;
    p.beta = g.beta;
    p.a_const = g.a_const;
    p.alpha_sat = alpha_sat;
    p.alpha_bs = alpha_bs;
    return p;
}

double sat_fading_ccdf(double x, const ChannelParams& params) {
    if (x <= 0.0) {
        return 1.0;
    }
    const double cdf_term = -std::expm1(-params.a_const * x / params.beta);
    return 1.0 - std::pow(cdf_term, params.xi_int);
}

double sat_fading_ccdf_binomial(double x, const ChannelParams& params) {
    const double a = params.a_const * x / params.beta;
    double sum = 0.0;
    for (int q = 1; q <= params.xi_int; ++q) {
        const double c = boost::math::binomial_coefficient<double>(params.xi_int, q);
        sum += ((q % 2 == 1) ? c : -c) * std::exp(-q * a);
    }
    return sum;
}

double mean_sat_fading(const ChannelParams& params) { return params.xi_exact * params.beta; }

AntennaPattern AntennaPattern::make(double g_max_db, double l_s_db, double l_f_db, double psi_b_rad) {
    if (!(psi_b_rad > 0.0)) {
        throw InvalidArgument("antenna half 3 dB beamwidth must be positive");
    }
    if (!(l_s_db < 0.0)) {
        throw InvalidArgument("near-in side-lobe level L_S must be negative");
    }
    AntennaPattern p;
    p.g_max_db = g_max_db;
    p.l_s_db = l_s_db;
    p.l_f_db = l_f_db;
    p.psi_b_rad = psi_b_rad;
    p.y_rad = psi_b_rad * std::sqrt(-l_s_db / 3.0);
    p.z_rad = p.y_rad * std::pow(10.0, 0.04 * (g_max_db + l_s_db + l_f_db));
    if (!(p.z_rad > p.y_rad)) {
        throw InvalidArgument("antenna breakpoint Z must exceed Y (needs G_max + L_S + L_F > 0)");
    }
    return p;
}

GainBranch AntennaPattern::branch_at(double psi_rad) const {
    if (psi_rad < psi_b_rad) return GainBranch::MainLobe;
    if (psi_rad < y_rad) return GainBranch::NearIn;
    if (psi_rad < z_rad) return GainBranch::SideLobe;
    return GainBranch::FarOut;
}

double AntennaPattern::branch_gain_db(double psi_rad, GainBranch branch) const {
    switch (branch) {
        case GainBranch::MainLobe:
            return g_max_db;
        case GainBranch::NearIn: {
            const double u = psi_rad / psi_b_rad;
            return g_max_db - 3.0 * u * u;
        }
        case GainBranch::SideLobe:
            return g_max_db + l_s_db - 25.0 * std::log10(psi_rad / y_rad);
        case GainBranch::FarOut:
            return l_f_db;
    }
    return l_f_db;
}

double AntennaPattern::gain_db(double psi_rad) const { return branch_gain_db(psi_rad, branch_at(psi_rad)); }

double AntennaPattern::branch_start(GainBranch branch) const {
    switch (branch) {
        case GainBranch::MainLobe:
            return 0.0;
        case GainBranch::NearIn:
            return psi_b_rad;
        case GainBranch::SideLobe:
            return y_rad;
        case GainBranch::FarOut:
            return z_rad;
    }
    return 0.0;
}

double antenna_gain_linear(double psi_rad, const AntennaPattern& pattern) {
    return db_to_linear(pattern.gain_db(psi_rad));
}

double antenna_gain_linear(double psi_rad, const AntennaPattern& pattern, GainBranch branch) {
    return db_to_linear(pattern.branch_gain_db(psi_rad, branch));
}

}  // namespace stiran
