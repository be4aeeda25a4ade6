#pragma once

// System-level simulator used as the oracle for the analytic model.
//
// Each trial draws its own random stream from (seed, trial index), so
// estimates do not depend on how trials are spread over threads.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "stiran/scenario.hpp"

namespace stiran::mc {

/// SplitMix64 keyed by (seed, trial, stream). Satisfies
/// UniformRandomBitGenerator.
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream = 0);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();

private:
    std::uint64_t state_;
};

struct BsPoint {
    double radius_km = 0.0;
    double bearing_rad = 0.0;
};

struct Realization {
    std::vector<double> sat_angles;
    std::vector<double> sat_fadings;
    std::vector<BsPoint> bs_points;
    std::vector<double> bs_fadings;
};

struct SatView {
    double distance_km = 0.0;
    bool visible = false;
    double off_axis_rad = 0.0;
};

/// Places the satellite at orbit angle `angle` (measured from the orbit's
/// highest point) in 3-D and reports what the user at (0, 0, R_E) sees.
SatView geometry_of(double angle_rad, const OrbitGeometry& geom);

enum class FadingShape { Exact, Integer };

struct McOptions {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    /// BS sampling radius; 0 selects bs_truncation_radius().
    double bs_truncation_km = 0.0;
    /// Satellite gamma shape: the exact xi or its rounded value.
    FadingShape fading_shape = FadingShape::Exact;
};

struct Estimate {
    double value = 0.0;
    double half_width_95 = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t seed = 0;

    static Estimate from_counts(std::uint64_t successes, std::uint64_t trials, std::uint64_t seed);
};

/// Radius beyond which a BS delivers less than 1e-6 sigma^2 at unit fading.
double bs_truncation_radius(const Scenario& sc);

/// Fills `out` (buffers are reused). BS points are drawn on the annulus
/// [R_0, bs_radius_km].
void sample_realization(const Scenario& sc, CounterRng& rng, double bs_radius_km, FadingShape shape,
                        Realization& out);
Realization sample_realization(const Scenario& sc, CounterRng& rng, double bs_radius_km,
                               FadingShape shape = FadingShape::Exact);

enum class Server { None, Satellite, Bs };

/// Everything a trial decides, kept for inspection by tests.
struct TrialOutcome {
    std::size_t visible_count = 0;
    // distinct frequencies: each tier against its own interference
    double sinr_sat_distinct = 0.0;
    double sinr_bs_distinct = 0.0;
    // shared frequency
    Server server = Server::None;
    std::size_t server_index = 0;  // index into sat_angles or bs_points
    double signal_w = 0.0;
    double interference_sat_w = 0.0;
    double interference_bs_w = 0.0;
    double sinr_shared = 0.0;
};

TrialOutcome evaluate_trial(const Scenario& sc, const Realization& rz);

Estimate estimate_visibility(const Scenario& sc, const McOptions& opt);

struct AssociationEstimate {
    Estimate p_sat;  // conditional on a visible satellite
    Estimate p_bs;
    std::uint64_t visible_trials = 0;
};

AssociationEstimate estimate_association(const Scenario& sc, const McOptions& opt);

struct CoveragePoint {
    double threshold_linear = 0.0;
    Estimate distinct;
    Estimate shared;
};

struct CoverageCurve {
    std::vector<CoveragePoint> points;
    Estimate p_vis;
    Estimate assoc_sat;  // shared mode, conditional on visibility
    double bs_truncation_km = 0.0;
};

/// Both frequency modes on the same realizations for every threshold.
CoverageCurve estimate_coverage_curves(const Scenario& sc, const std::vector<double>& thresholds_linear,
                                       const McOptions& opt);

Estimate estimate_coverage(const Scenario& sc, FrequencyMode mode, double threshold_linear, const McOptions& opt);

// Samplers for the distribution oracles.

/// Nearest visible satellite distances from `samples` realizations that have
/// at least one visible satellite.
std::vector<double> sample_nearest_sat_distances(const Scenario& sc, std::size_t samples, std::uint64_t seed);
std::vector<double> sample_nearest_bs_distances(const Scenario& sc, std::size_t samples, std::uint64_t seed);

struct ServingDistances {
    std::vector<double> sat_km;
    std::vector<double> bs_km;
};

/// Serving distances under the mean-power rule, from `trials` visible trials.
ServingDistances sample_serving_distances(const Scenario& sc, std::size_t trials, std::uint64_t seed);

/// E[exp(-s I)] over visible satellites farther than r_excl.
double estimate_laplace_sat(double s, double r_excl_km, const Scenario& sc, std::size_t trials, std::uint64_t seed);

}  // namespace stiran::mc
