#include "stiran/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace stiran {

namespace {

struct KeyDefault {
    const char* key;
    double value;
};

constexpr KeyDefault kDefaults[] = {
    {"orbit.earth_radius_km", 6371.0},
    {"orbit.altitude_km", 500.0},
    {"orbit.polar_angle_deg", 90.0},
    {"orbit.azimuth_deg", 0.0},
    {"orbit.min_elevation_deg", 10.0},
    {"density.sat_per_km", 0.001},
    {"density.bs_per_km2", 1.0},
    {"terrestrial.hole_radius_km", 0.1},
    {"power.sat_dbm", 45.0},
    {"power.bs_dbm", 40.0},
    {"bias.sat", 1.0},
    {"bias.bs", 1.0},
    {"channel.sr_b", 0.063},
    {"channel.sr_m", 0.739},
    {"channel.sr_omega", 8.97e-4},
    {"channel.alpha_sat", 2.0},
    {"channel.alpha_bs", 4.0},
    {"channel.pathloss_ref_km", 0.001},
    {"antenna.gmax_dbi", 35.0},
    {"antenna.ls_db", -6.75},
    {"antenna.lf_db", 5.0},
    {"antenna.psi_b_deg", 1.6},
    {"noise.bandwidth_hz", 5e6},
    {"noise.psd_dbm_hz", -174.0},
    {"noise.figure_db", 11.0},
    {"run.trials", 100000.0},
    {"run.seed", 1.0},
    {"mc.bs_truncation_km", 0.0},
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, int line, const std::string& key) {
    const std::string t = trim(text);
    if (t.empty()) throw ParseError(line, key, "empty value");
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v)) {
        throw ParseError(line, key, "not a finite number: '" + t + "'");
    }
    return v;
}

std::vector<double> parse_list(const std::string& text, int line, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(item, line, key));
    if (out.empty()) throw ParseError(line, key, "empty list");
    return out;
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool is_integer(double v) { return v == std::floor(v); }

constexpr double kDeg = std::numbers::pi / 180.0;

}  // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : Error([&] {
          std::string msg = "invalid configuration:";
          for (const auto& p : problems) msg += "\n  - " + p;
          return msg;
      }()),
      problems_(std::move(problems)) {}

std::vector<std::string> numeric_keys() {
    std::vector<std::string> out;
    for (const auto& kd : kDefaults) out.emplace_back(kd.key);
    std::sort(out.begin(), out.end());
    return out;
}

ScenarioConfig ScenarioConfig::defaults() {
    ScenarioConfig c;
    for (const auto& kd : kDefaults) c.values[kd.key] = kd.value;
    c.thresholds_db = {-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0};
    return c;
}

double ScenarioConfig::get(const std::string& key) const {
    const auto it = values.find(key);
    if (it == values.end()) throw InvalidArgument("unknown configuration key " + key);
    return it->second;
}

std::uint64_t ScenarioConfig::trials() const { return static_cast<std::uint64_t>(get("run.trials")); }
std::uint64_t ScenarioConfig::seed() const { return static_cast<std::uint64_t>(get("run.seed")); }

Scenario ScenarioConfig::scenario(const std::map<std::string, double>& overrides) const {
    std::map<std::string, double> v = values;
    for (const auto& [k, x] : overrides) v[k] = x;
    try {
        Scenario s;
        s.geom = OrbitGeometry::make(v.at("orbit.earth_radius_km"), v.at("orbit.altitude_km"),
                                     v.at("orbit.polar_angle_deg") * kDeg, v.at("orbit.min_elevation_deg") * kDeg,
                                     v.at("orbit.azimuth_deg") * kDeg);
        s.channel = ChannelParams::make(v.at("channel.sr_b"), v.at("channel.sr_m"), v.at("channel.sr_omega"),
                                        v.at("channel.alpha_sat"), v.at("channel.alpha_bs"));
        s.pattern = AntennaPattern::make(v.at("antenna.gmax_dbi"), v.at("antenna.ls_db"), v.at("antenna.lf_db"),
                                         v.at("antenna.psi_b_deg") * kDeg);
        s.noise = NoiseModel::make(v.at("noise.bandwidth_hz"), v.at("noise.psd_dbm_hz"), v.at("noise.figure_db"));
        s.bias = BiasConfig{v.at("bias.sat"), v.at("bias.bs"), dbm_to_watts(v.at("power.sat_dbm")),
                            dbm_to_watts(v.at("power.bs_dbm"))};
        s.lambda_sat = v.at("density.sat_per_km");
        s.lambda_bs = v.at("density.bs_per_km2");
        s.hole_radius_km = v.at("terrestrial.hole_radius_km");
        s.pathloss_ref_km = v.at("channel.pathloss_ref_km");
        s.validate();
        return s;
    } catch (const InvalidArgument& e) {
        throw ValidationError({e.what()});
    }
}

mc::McOptions ScenarioConfig::mc_options(unsigned threads) const {
    mc::McOptions o;
    o.trials = trials();
    o.seed = seed();
    o.threads = threads;
    o.bs_truncation_km = get("mc.bs_truncation_km");
    o.fading_shape = fading_shape;
    return o;
}

std::string ScenarioConfig::canonical() const {
    std::string out;
    for (const auto& [k, v] : values) out += k + "=" + format_value(v) + "\n";
    out += std::string("mode=") + (mode == ModeSelection::Distinct ? "distinct" : mode == ModeSelection::Shared ? "shared" : "both") + "\n";
    out += std::string("run.kind=") + (run == RunKind::Analytic ? "analytic" : run == RunKind::MonteCarlo ? "montecarlo" : "both") + "\n";
    out += std::string("mc.fading_shape=") + (fading_shape == mc::FadingShape::Exact ? "exact" : "integer") + "\n";
    out += "sinr.thresholds_db=";
    for (double t : thresholds_db) out += format_value(t) + ",";
    out += "\n";
    for (const auto& [k, list] : sweeps) {
        out += "sweep." + k + "=";
        for (double x : list) out += format_value(x) + ",";
        out += "\n";
    }
    return out;
}

ScenarioConfig parse_config(const std::string& text) {
    ScenarioConfig cfg = ScenarioConfig::defaults();
    std::set<std::string> seen;
    std::stringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw.substr(0, raw.find('#')));
        if (s.empty()) continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ParseError(line, "", "expected 'key = value'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (!seen.insert(key).second) throw ParseError(line, key, "duplicate key");

        if (key == "mode") {
            if (value == "distinct") cfg.mode = ModeSelection::Distinct;
            else if (value == "shared") cfg.mode = ModeSelection::Shared;
            else if (value == "both") cfg.mode = ModeSelection::Both;
            else throw ParseError(line, key, "expected distinct, shared or both");
        } else if (key == "run.kind") {
            if (value == "analytic") cfg.run = RunKind::Analytic;
            else if (value == "montecarlo") cfg.run = RunKind::MonteCarlo;
            else if (value == "both") cfg.run = RunKind::Both;
            else throw ParseError(line, key, "expected analytic, montecarlo or both");
        } else if (key == "mc.fading_shape") {
            if (value == "exact") cfg.fading_shape = mc::FadingShape::Exact;
            else if (value == "integer") cfg.fading_shape = mc::FadingShape::Integer;
            else throw ParseError(line, key, "expected exact or integer");
        } else if (key == "sinr.thresholds_db") {
            cfg.thresholds_db = parse_list(value, line, key);
        } else if (key.rfind("sweep.", 0) == 0) {
            const std::string target = key.substr(6);
            if (!cfg.values.count(target) || target.rfind("run.", 0) == 0 || target.rfind("mc.", 0) == 0) {
                throw ParseError(line, key, "cannot sweep '" + target + "'");
            }
            cfg.sweeps.emplace_back(target, parse_list(value, line, key));
        } else if (cfg.values.count(key)) {
            cfg.values[key] = parse_number(value, line, key);
        } else {
            throw ParseError(line, key, "unknown key");
        }
    }
    validate(cfg);
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open config file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

void validate(const ScenarioConfig& cfg) {
    std::vector<std::string> problems;
    auto check = [&](const std::string& key, double v, bool ok, const char* rule) {
        if (!ok) problems.push_back(key + " = " + format_value(v) + ": " + rule);
    };
    auto check_values = [&](const std::map<std::string, double>& v) {
        const auto at = [&](const char* k) { return v.at(k); };
        check("orbit.earth_radius_km", at("orbit.earth_radius_km"), at("orbit.earth_radius_km") > 0, "must be positive");
        check("orbit.altitude_km", at("orbit.altitude_km"), at("orbit.altitude_km") > 0, "must be positive");
        check("orbit.polar_angle_deg", at("orbit.polar_angle_deg"),
              at("orbit.polar_angle_deg") >= 0 && at("orbit.polar_angle_deg") <= 180, "must lie in [0, 180]");
        check("orbit.min_elevation_deg", at("orbit.min_elevation_deg"),
              at("orbit.min_elevation_deg") >= 0 && at("orbit.min_elevation_deg") < 90, "must lie in [0, 90)");
        check("density.sat_per_km", at("density.sat_per_km"), at("density.sat_per_km") >= 0, "must be nonnegative");
        check("density.bs_per_km2", at("density.bs_per_km2"), at("density.bs_per_km2") >= 0, "must be nonnegative");
        check("terrestrial.hole_radius_km", at("terrestrial.hole_radius_km"), at("terrestrial.hole_radius_km") >= 0,
              "must be nonnegative");
        check("bias.sat", at("bias.sat"), at("bias.sat") > 0, "must be positive");
        check("bias.bs", at("bias.bs"), at("bias.bs") > 0, "must be positive");
        check("channel.sr_b", at("channel.sr_b"), at("channel.sr_b") > 0, "must be positive");
        check("channel.sr_m", at("channel.sr_m"), at("channel.sr_m") > 0, "must be positive");
        check("channel.sr_omega", at("channel.sr_omega"), at("channel.sr_omega") >= 0, "must be nonnegative");
        check("channel.alpha_sat", at("channel.alpha_sat"), at("channel.alpha_sat") >= 2, "must be at least 2");
        check("channel.alpha_bs", at("channel.alpha_bs"), at("channel.alpha_bs") > 2, "must exceed 2");
        check("channel.pathloss_ref_km", at("channel.pathloss_ref_km"), at("channel.pathloss_ref_km") > 0,
              "must be positive");
        check("antenna.psi_b_deg", at("antenna.psi_b_deg"), at("antenna.psi_b_deg") > 0, "must be positive");
        check("antenna.ls_db", at("antenna.ls_db"), at("antenna.ls_db") < 0, "must be negative");
        check("noise.bandwidth_hz", at("noise.bandwidth_hz"), at("noise.bandwidth_hz") > 0, "must be positive");
        check("run.trials", at("run.trials"), at("run.trials") >= 1 && is_integer(at("run.trials")),
              "must be a positive integer");
        check("run.seed", at("run.seed"), at("run.seed") >= 0 && is_integer(at("run.seed")) && at("run.seed") < 1.8e19,
              "must be a nonnegative integer");
        check("mc.bs_truncation_km", at("mc.bs_truncation_km"), at("mc.bs_truncation_km") >= 0,
              "must be nonnegative (0 = automatic)");
    };
    check_values(cfg.values);
    for (const auto& [key, list] : cfg.sweeps) {
        for (double x : list) {
            std::map<std::string, double> v = cfg.values;
            v[key] = x;
            const std::size_t before = problems.size();
            check_values(v);
            for (std::size_t i = before; i < problems.size(); ++i) problems[i] = "sweep value: " + problems[i];
        }
    }
    for (double t : cfg.thresholds_db) {
        if (!std::isfinite(t)) problems.push_back("sinr.thresholds_db contains a non-finite value");
    }
    if (problems.empty()) {
        // Cross-parameter checks that only the model constructors know about.
        try {
            cfg.scenario();
        } catch (const ValidationError& e) {
            problems.insert(problems.end(), e.problems().begin(), e.problems().end());
        }
    }
    // Duplicates appear when the same bad base value is rechecked for every sweep value.
    std::vector<std::string> unique;
    for (auto& p : problems) {
        if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(p);
    }
    if (!unique.empty()) throw ValidationError(unique);
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace stiran
