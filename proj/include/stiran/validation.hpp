#pragma once

// Analytic-versus-simulation acceptance checks, one function per criterion.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace stiran {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    /// Measured values behind the verdict, one finding per line.
    std::vector<std::string> details;
    double seconds = 0.0;
};

struct ValidationOptions {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 20240611;
    unsigned threads = 1;
    /// Samples per empirical distribution in the distribution suite.
    std::uint64_t samples = 100000;
};

CriterionResult check_cross_oracle(const ValidationOptions& opt);
CriterionResult check_stiran_vs_terrestrial(const ValidationOptions& opt);
CriterionResult check_zenith_orbit_best(const ValidationOptions& opt);
CriterionResult check_association_trends(const ValidationOptions& opt);
CriterionResult check_distributions(const ValidationOptions& opt);
CriterionResult check_laplace(const ValidationOptions& opt);
CriterionResult check_limits(const ValidationOptions& opt);
CriterionResult check_determinism(const ValidationOptions& opt);

/// Runs criteria 1-8 in order, reporting each result as it completes.
std::vector<CriterionResult> run_acceptance(const ValidationOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "[PASS] 3 title (1.2 s)" followed by indented details.
std::string format_result(const CriterionResult& r, bool with_details = true);

}  // namespace stiran
