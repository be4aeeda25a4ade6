#pragma once

// Fading and antenna models. This is the only place where decibel values are
// converted to linear quantities; everything downstream is linear.

namespace stiran {

double db_to_linear(double db);
double linear_to_db(double linear);
double dbm_to_watts(double dbm);

/// Gamma(xi, beta) match of a Shadowed-Rician channel SR(b, m, Omega).
/// xi_int = max(1, round(xi_exact)) is the shape used by the analytic
/// expressions; a_const = xi (xi!)^(-1/xi!) is computed from xi_int.
struct GammaApproximation {
    double xi_exact = 1.0;
    int xi_int = 1;
    double beta = 1.0;
    double a_const = 1.0;
};

/// Throws InvalidChannel unless b > 0, m > 0 and omega >= 0.
GammaApproximation sr_to_gamma(double b, double m, double omega);

struct ChannelParams {
    double sr_b = 0.0;
    double sr_m = 0.0;
    double sr_omega = 0.0;
    double xi_exact = 1.0;
    int xi_int = 1;
    double beta = 1.0;
    double a_const = 1.0;
    double alpha_sat = 2.0;
    double alpha_bs = 4.0;

    /// Throws InvalidChannel on bad fading parameters or on alpha_sat < 2,
    /// alpha_bs <= 2.
    static ChannelParams make(double b, double m, double omega, double alpha_sat, double alpha_bs);
};

/// P(h_sat > x) ~ 1 - (1 - exp(-A x / beta))^xi_int. Exact for xi_int == 1.
double sat_fading_ccdf(double x, const ChannelParams& params);

/// Same quantity written as sum_{q=1}^{xi} C(xi, q) (-1)^(q+1) exp(-q A x / beta).
double sat_fading_ccdf_binomial(double x, const ChannelParams& params);

/// Mean of the gamma match, xi_exact * beta (= 2b + Omega).
double mean_sat_fading(const ChannelParams& params);

enum class GainBranch { MainLobe = 0, NearIn = 1, SideLobe = 2, FarOut = 3 };

/// LEO reference radiation mask (ITU-R S.1528 style).
///   G_max                         psi < psi_b
///   G_max - 3 (psi / psi_b)^2     psi_b <= psi < Y
///   G_max + L_S - 25 log10(psi/Y) Y <= psi < Z
///   L_F                           psi >= Z
/// with Y = psi_b sqrt(-L_S / 3) and Z = Y 10^(0.04 (G_max + L_S + L_F)).
/// The mask drops by 3 dB at psi_b and jumps from -L_F to L_F at Z.
struct AntennaPattern {
    double g_max_db = 0.0;
    double l_s_db = 0.0;
    double l_f_db = 0.0;
    double psi_b_rad = 0.0;
    double y_rad = 0.0;
    double z_rad = 0.0;

    /// Throws InvalidArgument unless psi_b > 0, L_S < 0 and Z > Y.
    static AntennaPattern make(double g_max_db, double l_s_db, double l_f_db, double psi_b_rad);

    GainBranch branch_at(double psi_rad) const;
    double gain_db(double psi_rad) const;
    /// Evaluates one branch formula regardless of where psi falls.
    double branch_gain_db(double psi_rad, GainBranch branch) const;
    /// Off-axis angle at which `branch` starts (0 for the main lobe).
    double branch_start(GainBranch branch) const;
};

double antenna_gain_linear(double psi_rad, const AntennaPattern& pattern);
double antenna_gain_linear(double psi_rad, const AntennaPattern& pattern, GainBranch branch);

}  // namespace stiran
