#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "stiran/config.hpp"
#include "stiran/coverage.hpp"

namespace stiran {

/// Largest accepted |analytic - Monte-Carlo| gap per row.
inline constexpr double kCrossOracleTolerance = 0.03;

struct SweepRow {
    std::vector<double> sweep_values;
    FrequencyMode mode = FrequencyMode::Distinct;
    double gamma_db = 0.0;

    double analytic_total = std::numeric_limits<double>::quiet_NaN();
    double p_vis = std::numeric_limits<double>::quiet_NaN();
    CoverageBranches branches;

    double mc_total = std::numeric_limits<double>::quiet_NaN();
    double mc_half_width = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t mc_trials = 0;
    double mc_p_vis = std::numeric_limits<double>::quiet_NaN();
    double mc_assoc_sat = std::numeric_limits<double>::quiet_NaN();
    double mc_bs_truncation_km = std::numeric_limits<double>::quiet_NaN();

    /// "ok" or "numerical_error".
    std::string status = "ok";
    std::string message;

    double abs_diff() const;
    /// NaN unless both analytic and Monte-Carlo values are present.
    double within_tolerance() const;
};

struct SweepResult {
    std::vector<std::string> sweep_keys;
    std::vector<SweepRow> rows;
    std::uint64_t config_hash = 0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    bool ran_mc = false;

    bool has_numerical_errors() const;
};

/// Cartesian product of the sweep values times the threshold grid. Sweep
/// points run on up to `threads` workers; rows come out in sweep order.
SweepResult run_sweep(const ScenarioConfig& cfg, unsigned threads = 1);

std::vector<std::string> csv_columns(const std::vector<std::string>& sweep_keys);
void emit_csv(const SweepResult& result, std::ostream& out);
/// Throws IoError when the file cannot be written.
void emit_csv(const SweepResult& result, const std::string& path);
std::string to_csv(const SweepResult& result);

}  // namespace stiran
