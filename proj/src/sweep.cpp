#include "stiran/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "stiran/version.hpp"

namespace stiran {

namespace {

struct PointResult {
    std::vector<SweepRow> rows;
};

std::vector<std::vector<double>> cartesian(const std::vector<std::pair<std::string, std::vector<double>>>& sweeps) {
    std::vector<std::vector<double>> out{{}};
    for (const auto& [key, values] : sweeps) {
        std::vector<std::vector<double>> next;
        for (const auto& prefix : out) {
            for (double v : values) {
                auto row = prefix;
                row.push_back(v);
                next.push_back(std::move(row));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::vector<FrequencyMode> modes_of(ModeSelection m) {
    switch (m) {
        case ModeSelection::Distinct: return {FrequencyMode::Distinct};
        case ModeSelection::Shared: return {FrequencyMode::Shared};
        case ModeSelection::Both: break;
    }
    return {FrequencyMode::Distinct, FrequencyMode::Shared};
}

PointResult evaluate_point(const ScenarioConfig& cfg, const std::vector<double>& point, unsigned mc_threads) {
    std::map<std::string, double> overrides;
    for (std::size_t i = 0; i < point.size(); ++i) overrides[cfg.sweeps[i].first] = point[i];
    const Scenario sc = cfg.scenario(overrides);

    std::vector<double> gammas;
    for (double db : cfg.thresholds_db) gammas.push_back(db_to_linear(db));
    const std::vector<FrequencyMode> modes = modes_of(cfg.mode);

    PointResult out;
    for (FrequencyMode mode : modes) {
        for (double db : cfg.thresholds_db) {
            SweepRow r;
            r.sweep_values = point;
            r.mode = mode;
            r.gamma_db = db;
            out.rows.push_back(r);
        }
    }
    const std::size_t g = gammas.size();
    auto row = [&](std::size_t mode_index, std::size_t j) -> SweepRow& { return out.rows[mode_index * g + j]; };

    if (cfg.run != RunKind::MonteCarlo) {
        for (std::size_t m = 0; m < modes.size(); ++m) {
            try {
                const auto curve = coverage_curve(sc, modes[m], gammas);
                for (std::size_t j = 0; j < g; ++j) {
                    row(m, j).analytic_total = curve[j].total;
                    row(m, j).p_vis = curve[j].p_vis;
                    row(m, j).branches = curve[j].branches;
                }
            } catch (const NumericalError& e) {
                for (std::size_t j = 0; j < g; ++j) {
                    row(m, j).status = "numerical_error";
                    row(m, j).message = e.what();
                }
            }
        }
    }
    if (cfg.run != RunKind::Analytic) {
        const mc::CoverageCurve c = mc::estimate_coverage_curves(sc, gammas, cfg.mc_options(mc_threads));
        for (std::size_t m = 0; m < modes.size(); ++m) {
            for (std::size_t j = 0; j < g; ++j) {
                SweepRow& r = row(m, j);
                const mc::Estimate& e = modes[m] == FrequencyMode::Distinct ? c.points[j].distinct : c.points[j].shared;
                r.mc_total = e.value;
                r.mc_half_width = e.half_width_95;
                r.mc_trials = e.trials;
                r.mc_p_vis = c.p_vis.value;
                if (modes[m] == FrequencyMode::Shared && c.assoc_sat.trials > 0) r.mc_assoc_sat = c.assoc_sat.value;
                r.mc_bs_truncation_km = c.bs_truncation_km;
            }
        }
    }
    return out;
}

std::string fmt(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string hex64(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string sanitize(std::string s) {
    for (char& c : s) {
        if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ' ';
    }
    return s;
}

}  // namespace

double SweepRow::abs_diff() const { return std::abs(analytic_total - mc_total); }

double SweepRow::within_tolerance() const {
    const double d = abs_diff();
    if (std::isnan(d)) return std::numeric_limits<double>::quiet_NaN();
    return d <= kCrossOracleTolerance ? 1.0 : 0.0;
}

bool SweepResult::has_numerical_errors() const {
    for (const auto& r : rows) {
        if (r.status != "ok") return true;
    }
    return false;
}

SweepResult run_sweep(const ScenarioConfig& cfg, unsigned threads) {
    validate(cfg);
    threads = std::max(1u, threads);
    SweepResult res;
    for (const auto& s : cfg.sweeps) res.sweep_keys.push_back(s.first);
    res.config_hash = fnv1a(cfg.canonical());
    res.seed = cfg.seed();
    res.trials = cfg.trials();
    res.ran_mc = cfg.run != RunKind::Analytic;

    const std::vector<std::vector<double>> points = cartesian(cfg.sweeps);
    std::vector<PointResult> results(points.size());
    if (res.ran_mc || threads == 1 || points.size() == 1) {
        // Monte-Carlo points use all threads internally; trials, not points,
        // are the unit of parallel work.
        for (std::size_t i = 0; i < points.size(); ++i) results[i] = evaluate_point(cfg, points[i], threads);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(threads);
        auto worker = [&](unsigned w) {
            try {
                for (std::size_t i = next++; i < points.size(); i = next++) results[i] = evaluate_point(cfg, points[i], 1);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < std::min<std::size_t>(threads, points.size()); ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    for (auto& p : results) {
        for (auto& r : p.rows) res.rows.push_back(std::move(r));
    }
    return res;
}

std::vector<std::string> csv_columns(const std::vector<std::string>& sweep_keys) {
    std::vector<std::string> cols = sweep_keys;
    for (const char* c : {"mode", "gamma_db", "analytic_total", "p_vis", "sat_conditional", "bs_conditional",
                          "assoc_sat", "assoc_bs", "invis_bs", "mc_total", "mc_half_width", "mc_trials", "mc_p_vis",
                          "mc_assoc_sat", "mc_bs_truncation_km", "abs_diff", "tolerance", "within_tolerance",
                          "status"}) {
        cols.emplace_back(c);
    }
    return cols;
}

void emit_csv(const SweepResult& result, std::ostream& out) {
    out << "# stiran " << kVersion << " config_hash=" << hex64(result.config_hash) << " seed=" << result.seed
        << " trials=" << (result.ran_mc ? result.trials : 0)
        << " bs_truncation=" << (result.ran_mc ? "see mc_bs_truncation_km" : "n/a") << "\n";
    const std::vector<std::string> cols = csv_columns(result.sweep_keys);
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
    for (const SweepRow& r : result.rows) {
        for (double v : r.sweep_values) out << fmt(v) << ",";
        out << to_string(r.mode) << "," << fmt(r.gamma_db) << "," << fmt(r.analytic_total) << "," << fmt(r.p_vis) << ","
            << fmt(r.branches.sat_conditional) << "," << fmt(r.branches.bs_conditional) << ","
            << fmt(r.branches.assoc_sat) << "," << fmt(r.branches.assoc_bs) << "," << fmt(r.branches.invis_bs) << ","
            << fmt(r.mc_total) << "," << fmt(r.mc_half_width) << "," << (r.mc_trials ? std::to_string(r.mc_trials) : "")
            << "," << fmt(r.mc_p_vis) << "," << fmt(r.mc_assoc_sat) << "," << fmt(r.mc_bs_truncation_km) << ","
            << fmt(r.abs_diff()) << "," << fmt(kCrossOracleTolerance) << "," << fmt(r.within_tolerance()) << ","
            << (r.status == "ok" ? r.status : r.status + ": " + sanitize(r.message)) << "\n";
    }
}

void emit_csv(const SweepResult& result, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    emit_csv(result, f);
    f.flush();
    if (!f) throw IoError("failed writing " + path);
}

std::string to_csv(const SweepResult& result) {
    std::ostringstream ss;
    emit_csv(result, ss);
    return ss.str();
}

}  // namespace stiran
