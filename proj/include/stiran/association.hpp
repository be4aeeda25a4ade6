#pragma once

// Maximum biased received power association between the nearest visible
// satellite and the nearest BS, using mean fading for the satellite link.
//
// The satellite power g(r) = rho_sat P_sat hbar G(psi(r)) (r/d0)^-alpha_sat is
// strictly decreasing inside each antenna-mask branch but jumps at the
// branch boundaries (down at psi_b, up at Z), so level sets are handled one
// branch panel at a time.

#include <vector>

#include "stiran/quadrature.hpp"
#include "stiran/scenario.hpp"

namespace stiran {

double biased_mean_power_sat(double r_km, const Scenario& sc);
double biased_power_bs(double r_km, const Scenario& sc);
/// BS distance at which the biased BS power equals `power`.
double bs_distance_at_power(double power, const Scenario& sc);

enum class ThresholdBranch { Interior, BelowSupport, AboveSupport };

struct AssociationThresholds {
    /// First satellite distance whose power falls to the BS power at R_0.
    /// BelowSupport: already below at r_min; AboveSupport: never below.
    double r1_km = 0.0;
    ThresholdBranch r1_branch = ThresholdBranch::Interior;
    /// BS distances matching the satellite power at r_min and at r_max.
    double r2_km = 0.0;
    double r3_km = 0.0;
    /// BS distances matching the largest and smallest satellite power on the
    /// support. Equal to r2, r3 when g is monotone.
    double r_always_km = 0.0;
    double r_never_km = 0.0;
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// g(r) on the visible support, cut at the antenna branch boundaries.
class SatPowerProfile {
public:
    struct Panel {
        double r_lo = 0.0;
        double r_hi = 0.0;
        GainBranch branch = GainBranch::MainLobe;
        double g_at_lo = 0.0;  // largest value on the panel
        double g_at_hi = 0.0;  // smallest value on the panel
    };

    explicit SatPowerProfile(const Scenario& sc);

    const std::vector<Panel>& panels() const { return panels_; }
    double g(double r_km) const;
    double max_power() const;
    double min_power() const;

    /// {r : g(r) < power} as disjoint ordered intervals (open on the left).
    std::vector<Interval> weaker_set(double power) const;
    /// Points where g crosses `power` (one at most per panel).
    std::vector<double> crossings(double power) const;
    /// Panel boundaries including r_min and r_max.
    std::vector<double> boundaries() const;

private:
    double g_on(const Panel& p, double r_km) const;
    double solve_on(const Panel& p, double power) const;

    Scenario sc_;
    std::vector<Panel> panels_;
};

AssociationThresholds solve_thresholds(const Scenario& sc);

/// Association state for one scenario. Requires a nonzero visibility
/// probability; throws InvalidArgument otherwise.
class Association {
public:
    explicit Association(const Scenario& sc, Tolerance tol = {});

    const Scenario& scenario() const { return sc_; }
    const SatPowerProfile& profile() const { return profile_; }
    const AssociationThresholds& thresholds() const { return thr_; }
    double p_vis() const { return p_vis_; }
    double t_visible() const { return t_a_; }

    /// Conditional on visibility; p_sat + p_bs = 1 up to quadrature error.
    double p_sat() const { return p_sat_; }
    double p_bs() const { return p_bs_; }

    /// BS exclusion radius for a satellite server at r: max(d1(r), R_0).
    double bs_exclusion(double r_sat_km) const;
    /// P(no BS beats a satellite at r), F_b.
    double sat_wins(double r_sat_km) const;
    /// P(nearest visible satellite weaker than `power` | visible).
    double prob_sat_weaker(double power) const;
    /// Infimum of the weaker set, clamped to [r_min, r_max].
    double d2(double power) const;

    double serving_sat_pdf(double r_km) const;
    double serving_sat_pdf_angle(double t_rad) const;
    double serving_bs_pdf(double r_km) const;

    /// Orbit-angle breakpoints where sat_wins() is not smooth.
    std::vector<double> sat_angle_breaks() const;
    /// BS distances where prob_sat_weaker(biased_power_bs(r)) is not smooth,
    /// plus the log-spaced breaks over the BS integration range.
    std::vector<double> bs_breaks() const;
    /// Upper limit of the BS-serving integrals.
    double bs_upper() const;

private:
    Scenario sc_;
    SatNetworkParams sat_;
    SatPowerProfile profile_;
    AssociationThresholds thr_;
    double p_vis_ = 0.0;
    double t_a_ = 0.0;
    double p_sat_ = 0.0;
    double p_bs_ = 0.0;
};

double assoc_prob_sat(const Scenario& sc);
double assoc_prob_bs(const Scenario& sc);
double serving_sat_distance_pdf(double r_km, const Scenario& sc);
double serving_bs_distance_pdf(double r_km, const Scenario& sc);

}  // namespace stiran
