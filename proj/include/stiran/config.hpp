#pragma once

// Flat "key = value" configuration. Lines starting with '#' are comments.
// Numeric keys carry their unit in the name; list values are comma separated.
// Omitted keys take the baseline defaults. `sweep.<key> = v1, v2, ...` sweeps
// a numeric key; several sweeps form a Cartesian product.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stiran/errors.hpp"
#include "stiran/montecarlo.hpp"
#include "stiran/scenario.hpp"

namespace stiran {

class ParseError : public Error {
public:
    ParseError(int line, std::string key, const std::string& what)
        : Error("line " + std::to_string(line) + (key.empty() ? "" : " (" + key + ")") + ": " + what),
          line_(line),
          key_(std::move(key)) {}
    int line() const { return line_; }
    const std::string& key() const { return key_; }

private:
    int line_;
    std::string key_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> problems);
    const std::vector<std::string>& problems() const { return problems_; }

private:
    std::vector<std::string> problems_;
};

enum class ModeSelection { Distinct, Shared, Both };
enum class RunKind { Analytic, MonteCarlo, Both };

struct ScenarioConfig {
    /// Every numeric key with its value in config units.
    std::map<std::string, double> values;
    ModeSelection mode = ModeSelection::Both;
    RunKind run = RunKind::Analytic;
    mc::FadingShape fading_shape = mc::FadingShape::Exact;
    std::vector<double> thresholds_db;
    /// Swept keys in file order.
    std::vector<std::pair<std::string, std::vector<double>>> sweeps;

    static ScenarioConfig defaults();

    double get(const std::string& key) const;
    std::uint64_t trials() const;
    std::uint64_t seed() const;

    /// Builds the linear-unit scenario, with `overrides` replacing values.
    /// Throws ValidationError.
    Scenario scenario(const std::map<std::string, double>& overrides = {}) const;
    mc::McOptions mc_options(unsigned threads) const;

    /// Canonical text form: every key in sorted order. Used for hashing.
    std::string canonical() const;
};

/// Sorted list of accepted numeric keys.
std::vector<std::string> numeric_keys();

ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);

/// Collects all problems; throws ValidationError if any.
void validate(const ScenarioConfig& cfg);

/// FNV-1a, 64 bit.
std::uint64_t fnv1a(const std::string& text);

}  // namespace stiran
