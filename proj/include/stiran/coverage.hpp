#pragma once

#include <limits>
#include <vector>

#include "stiran/association.hpp"
#include "stiran/quadrature.hpp"
#include "stiran/scenario.hpp"

namespace stiran {

/// Per-branch decomposition. Entries that do not apply to a mode are NaN.
struct CoverageBranches {
    double sat_conditional = std::numeric_limits<double>::quiet_NaN();
    double bs_conditional = std::numeric_limits<double>::quiet_NaN();
    double assoc_sat = std::numeric_limits<double>::quiet_NaN();
    double assoc_bs = std::numeric_limits<double>::quiet_NaN();
    double invis_bs = std::numeric_limits<double>::quiet_NaN();
};

struct CoverageResult {
    FrequencyMode mode = FrequencyMode::Distinct;
    double threshold_linear = 0.0;
    double total = 0.0;
    double p_vis = 0.0;
    CoverageBranches branches;
};

struct CoverageQuery {
    double threshold_linear = 1.0;
    FrequencyMode mode = FrequencyMode::Distinct;
    Scenario scenario;
    Tolerance tol{};
};

/// E[exp(-s I_sat)] for visible satellites beyond r_excl (PGFL over the
/// visible arc). r_excl is clamped to [r_min, r_max].
double laplace_interference_sat(double s, double r_excl_km, const Scenario& sc, Tolerance tol = {});

/// int_a^inf u / (1 + u^alpha / (s P_bs d0^alpha)) du, by quadrature.
double bs_interference_integral(double s, double a_km, const Scenario& sc, Tolerance tol = {});
/// Same integral in closed form; only valid for alpha_bs == 4.
double bs_interference_integral_alpha4(double s, double a_km, const Scenario& sc);

/// E[exp(-s I_bs)] for BSs beyond max(r_excl, R_0).
double laplace_interference_bs(double s, double r_excl_km, const Scenario& sc, Tolerance tol = {});

/// Includes the visibility factor.
double cov_distinct_sat(const CoverageQuery& q);
double cov_distinct_bs(const CoverageQuery& q);
CoverageResult cov_distinct_total(const CoverageQuery& q);

/// Conditional on visibility and on the respective association outcome.
double cov_shared_sat(const CoverageQuery& q, const Association& assoc);
double cov_shared_bs(const CoverageQuery& q, const Association& assoc);
double cov_shared_sat(const CoverageQuery& q);
double cov_shared_bs(const CoverageQuery& q);
/// No visible satellite: pure terrestrial coverage.
double cov_shared_invisible_bs(const CoverageQuery& q);
CoverageResult cov_shared_total(const CoverageQuery& q);

CoverageResult coverage(const CoverageQuery& q);

/// Evaluates one mode over a threshold grid, sharing the association setup.
std::vector<CoverageResult> coverage_curve(const Scenario& sc, FrequencyMode mode,
                                           const std::vector<double>& thresholds_linear, Tolerance tol = {});

}  // namespace stiran
