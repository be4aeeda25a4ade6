#include "stiran/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdarg>

#include "stiran/association.hpp"
#include "stiran/config.hpp"
#include "stiran/coverage.hpp"
#include "stiran/distributions.hpp"
#include "stiran/montecarlo.hpp"
#include "stiran/sweep.hpp"

namespace stiran {

namespace {

const std::vector<double> kGammaDb = {-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0};
const std::vector<double> kHoles = {0.1, 0.7};

std::vector<double> gammas_linear() {
    std::vector<double> g;
    for (double db : kGammaDb) g.push_back(db_to_linear(db));
    return g;
}

std::string printf_string(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(a + (b - a) * i / (n - 1));
    return v;
}

std::vector<double> logspace(double a, double b, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i) v.push_back(a * std::pow(b / a, static_cast<double>(i) / (n - 1)));
    return v;
}

/// sup over the grid of |F_emp - F|; `sorted` must be ascending.
double ks_on_grid(const std::vector<double>& sorted, const std::vector<double>& grid, const std::vector<double>& cdf) {
    double worst = 0.0;
    const double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double below = static_cast<double>(std::lower_bound(sorted.begin(), sorted.end(), grid[i]) - sorted.begin());
        const double upto = static_cast<double>(std::upper_bound(sorted.begin(), sorted.end(), grid[i]) - sorted.begin());
        worst = std::max({worst, std::abs(upto / n - cdf[i]), std::abs(below / n - cdf[i])});
    }
    return worst;
}

/// Exact KS statistic against a continuous CDF.
template <typename Cdf>
double ks_exact(std::vector<double> samples, Cdf cdf) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        worst = std::max({worst, (i + 1) / n - f, f - i / n});
    }
    return worst;
}

bool nonincreasing(const std::vector<double>& v, double slack = 1e-12) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] > v[i - 1] + slack) return false;
    }
    return true;
}

bool nondecreasing(const std::vector<double>& v, double slack = 1e-12) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] < v[i - 1] - slack) return false;
    }
    return true;
}

std::string join(const std::vector<double>& v, const char* f = "%.4f") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + printf_string(f, v[i]);
    return s;
}

}  // namespace

CriterionResult check_cross_oracle(const ValidationOptions& opt) {
    Timer timer;
    CriterionResult res{1, "analytic vs Monte-Carlo coverage within 0.03 (baseline, both holes, both modes)", true, {}, 0};
    mc::McOptions mo;
    mo.trials = opt.trials;
    mo.seed = opt.seed;
    mo.threads = opt.threads;
    for (double r0 : kHoles) {
        const Scenario sc = Scenario::baseline(r0);
        const auto dist = coverage_curve(sc, FrequencyMode::Distinct, gammas_linear());
        const auto shared = coverage_curve(sc, FrequencyMode::Shared, gammas_linear());
        const mc::CoverageCurve sim = mc::estimate_coverage_curves(sc, gammas_linear(), mo);
        for (FrequencyMode mode : {FrequencyMode::Distinct, FrequencyMode::Shared}) {
            double worst = 0.0;
            std::vector<double> an, mcv;
            for (std::size_t j = 0; j < kGammaDb.size(); ++j) {
                const double a = mode == FrequencyMode::Distinct ? dist[j].total : shared[j].total;
                const double m = mode == FrequencyMode::Distinct ? sim.points[j].distinct.value : sim.points[j].shared.value;
                an.push_back(a);
                mcv.push_back(m);
                worst = std::max(worst, std::abs(a - m));
            }
            const bool ok = worst <= kCrossOracleTolerance;
            res.passed = res.passed && ok;
            res.details.push_back(printf_string("R0=%.1f km %-8s max|diff|=%.4f %s", r0, std::string(to_string(mode)).c_str(),
                                                worst, ok ? "ok" : "FAIL"));
            res.details.push_back("  analytic " + join(an));
            res.details.push_back("  mc       " + join(mcv));
        }
    }
    res.seconds = timer.seconds();
    const bool fast = res.seconds < 900.0;
    res.passed = res.passed && fast;
    res.details.push_back(printf_string("trials=%llu threads=%u elapsed %.1f s (limit 900 s) %s",
                                        static_cast<unsigned long long>(opt.trials), opt.threads, res.seconds,
                                        fast ? "ok" : "FAIL"));
    return res;
}

CriterionResult check_stiran_vs_terrestrial(const ValidationOptions&) {
    Timer timer;
    CriterionResult res{2, "STIRAN coverage vs terrestrial-only (distinct: both holes; shared: R0=0.7 km)", true, {}, 0};
    for (double r0 : kHoles) {
        const Scenario sc = Scenario::baseline(r0);
        const auto dist = coverage_curve(sc, FrequencyMode::Distinct, gammas_linear());
        const auto shared = coverage_curve(sc, FrequencyMode::Shared, gammas_linear());
        double margin_d = 1.0, margin_s = 1.0;
        for (std::size_t j = 0; j < kGammaDb.size(); ++j) {
            const double terr = dist[j].branches.bs_conditional;
            margin_d = std::min(margin_d, dist[j].total - terr);
            margin_s = std::min(margin_s, shared[j].total - terr);
        }
        const bool ok_d = margin_d >= 0.0;
        res.passed = res.passed && ok_d;
        res.details.push_back(printf_string("R0=%.1f km distinct - terrestrial min margin %+.4f %s", r0, margin_d,
                                            ok_d ? "ok" : "FAIL"));
        if (r0 == 0.7) {
            const bool ok_s = margin_s >= 0.0;
            res.passed = res.passed && ok_s;
            res.details.push_back(printf_string("R0=%.1f km shared - terrestrial min margin %+.4f %s", r0, margin_s,
                                                ok_s ? "ok" : "FAIL"));
        } else {
            res.details.push_back(printf_string("R0=%.1f km shared - terrestrial min margin %+.4f (not required)", r0,
                                                margin_s));
        }
    }
    res.seconds = timer.seconds();
    return res;
}

CriterionResult check_zenith_orbit_best(const ValidationOptions&) {
    Timer timer;
    CriterionResult res{3, "coverage is largest at theta=90 deg over {90,80,70,60} at every threshold", true, {}, 0};
    const std::vector<double> thetas = {90.0, 80.0, 70.0, 60.0};
    for (double th : thetas) {
        Scenario sc = Scenario::baseline();
        sc.geom = OrbitGeometry::make(sc.geom.earth_radius_km, sc.geom.orbit_altitude_km, th * std::numbers::pi / 180.0,
                                      sc.geom.min_elevation_rad);
        res.details.push_back(printf_string("theta=%.0f deg: P_vis=%.4f", th, visibility_probability(sc.sat())));
    }
    for (FrequencyMode mode : {FrequencyMode::Distinct, FrequencyMode::Shared}) {
        for (double r0 : kHoles) {
            std::vector<std::vector<CoverageResult>> curves;
            for (double th : thetas) {
                Scenario sc = Scenario::baseline(r0);
                sc.geom = OrbitGeometry::make(sc.geom.earth_radius_km, sc.geom.orbit_altitude_km,
                                              th * std::numbers::pi / 180.0, sc.geom.min_elevation_rad);
                curves.push_back(coverage_curve(sc, mode, gammas_linear()));
            }
            int violations = 0;
            for (std::size_t j = 0; j < kGammaDb.size(); ++j) {
                for (std::size_t k = 1; k < thetas.size(); ++k) {
                    const double gap = curves[0][j].total - curves[k][j].total;
                    if (gap < 0.0) {
                        ++violations;
                        res.details.push_back(printf_string(
                            "  %s R0=%.1f km gamma=%+.0f dB: theta=90 gives %.4f < theta=%.0f gives %.4f (gap %.4f)",
                            std::string(to_string(mode)).c_str(), r0, kGammaDb[j], curves[0][j].total, thetas[k],
                            curves[k][j].total, gap));
                    }
                }
            }
            res.passed = res.passed && violations == 0;
            res.details.push_back(printf_string("%-8s R0=%.1f km: %d violations %s", std::string(to_string(mode)).c_str(),
                                                r0, violations, violations ? "FAIL" : "ok"));
        }
    }
    res.seconds = timer.seconds();
    return res;
}

CriterionResult check_association_trends(const ValidationOptions& opt) {
    Timer timer;
    CriterionResult res{4, "association trends, analytic vs Monte-Carlo within 0.01, P_sat + P_bs = 1", true, {}, 0};
    auto record = [&](bool ok, const std::string& line) {
        res.passed = res.passed && ok;
        res.details.push_back(line + (ok ? " ok" : " FAIL"));
    };

    mc::McOptions mo;
    mo.trials = opt.trials;
    mo.seed = opt.seed;
    mo.threads = opt.threads;

    std::vector<double> holes, p_sat, p_mc;
    double worst_mc = 0.0, worst_sum = 0.0;
    bool mc_exact = true;
    for (int i = 1; i <= 10; ++i) holes.push_back(0.1 * i);
    for (double r0 : holes) {
        const Scenario sc = Scenario::baseline(r0);
        const Association a(sc);
        const mc::AssociationEstimate e = mc::estimate_association(sc, mo);
        p_sat.push_back(a.p_sat());
        p_mc.push_back(e.p_sat.value);
        worst_mc = std::max(worst_mc, std::abs(a.p_sat() - e.p_sat.value));
        worst_sum = std::max(worst_sum, std::abs(a.p_sat() + a.p_bs() - 1.0));
        mc_exact = mc_exact && e.p_sat.successes + e.p_bs.successes == e.visible_trials;
    }
    record(nondecreasing(p_sat), "P_sat nondecreasing in R0 (0.1..1.0 km): " + join(p_sat));
    res.details.push_back("  Monte-Carlo P_sat: " + join(p_mc));
    record(worst_mc <= 0.01, printf_string("max |analytic - MC| over R0 sweep = %.4f", worst_mc));
    record(worst_sum <= 5e-3, printf_string("max |P_sat + P_bs - 1| analytic = %.2e", worst_sum));
    record(mc_exact, "Monte-Carlo P_sat + P_bs counts equal visible trials exactly");

    for (double r0 : kHoles) {
        std::vector<double> ps;
        for (double lam : {2e-4, 5e-4, 1e-3, 2e-3, 5e-3}) {
            Scenario sc = Scenario::baseline(r0);
            sc.lambda_sat = lam;
            ps.push_back(Association(sc).p_sat());
        }
        record(nondecreasing(ps), printf_string("R0=%.1f km P_sat nondecreasing in lambda_sat: ", r0) + join(ps));
        std::vector<double> pb;
        for (double lam : {0.2, 0.5, 1.0, 2.0, 5.0}) {
            Scenario sc = Scenario::baseline(r0);
            sc.lambda_bs = lam;
            pb.push_back(Association(sc).p_bs());
        }
        record(nondecreasing(pb), printf_string("R0=%.1f km P_bs nondecreasing in lambda_bs: ", r0) + join(pb));
    }
    res.seconds = timer.seconds();
    return res;
}

CriterionResult check_distributions(const ValidationOptions& opt) {
    Timer timer;
    CriterionResult res{5, "distance distributions: normalization, monotone CCDFs, PDF = -dCCDF/dr, KS < 0.02", true, {}, 0};
    auto record = [&](bool ok, const std::string& line) {
        res.passed = res.passed && ok;
        res.details.push_back(line + (ok ? " ok" : " FAIL"));
    };
    const std::size_t n = static_cast<std::size_t>(opt.samples);
    const Scenario base = Scenario::baseline(0.1);
    const SatNetworkParams sat = base.sat();
    const double r_min = sat.cap.r_min_km;
    const double r_max = sat.cap.r_max_km;

    // Nearest satellite.
    const double norm_sat = integrate([&](double r) { return nearest_sat_pdf(r, sat); }, r_min, r_max,
                                      Tolerance{1e-10, 1e-9}, "nearest satellite normalization");
    record(std::abs(norm_sat - 1.0) <= 1e-3, printf_string("int f_rsat = %.8f", norm_sat));
    std::vector<double> ccdf;
    for (double r : linspace(r_min, r_max, 1000)) ccdf.push_back(nearest_sat_ccdf(r, sat));
    record(nonincreasing(ccdf) && std::abs(ccdf.front() - 1.0) < 1e-12 && std::abs(ccdf.back()) < 1e-12,
           "nearest satellite CCDF monotone from 1 to 0 on 1000 points");
    double worst_fd = 0.0;
    for (double r : linspace(r_min + 0.05 * (r_max - r_min), r_max - 0.05 * (r_max - r_min), 60)) {
        const double h = 1e-4 * (r_max - r_min);
        const double fd = (nearest_sat_ccdf(r - h, sat) - nearest_sat_ccdf(r + h, sat)) / (2 * h);
        worst_fd = std::max(worst_fd, std::abs(fd / nearest_sat_pdf(r, sat) - 1.0));
    }
    record(worst_fd <= 1e-4, printf_string("nearest satellite pdf vs finite difference: max rel err %.2e", worst_fd));
    const double ks_sat = ks_exact(mc::sample_nearest_sat_distances(base, n, opt.seed),
                                   [&](double r) { return 1.0 - nearest_sat_ccdf(r, sat); });
    record(ks_sat < 0.02, printf_string("nearest satellite KS = %.4f (%zu samples)", ks_sat, n));

    // Nearest BS.
    for (double r0 : kHoles) {
        const BsNetworkParams bs = Scenario::baseline(r0).bs();
        const double hi = bs_integration_limit(bs);
        const double norm_bs = integrate_panels([&](double r) { return nearest_bs_pdf(r, bs); }, bs_integration_breaks(bs),
                                                Tolerance{1e-10, 1e-9}, "nearest BS normalization")
                                   .value;
        std::vector<double> c;
        for (double r : linspace(r0, hi, 1000)) c.push_back(nearest_bs_ccdf(r, bs));
        double worst = 0.0;
        for (double r : linspace(r0 + 0.01, r0 + 3.0, 60)) {
            const double h = 1e-5;
            const double fd = (nearest_bs_ccdf(r - h, bs) - nearest_bs_ccdf(r + h, bs)) / (2 * h);
            worst = std::max(worst, std::abs(fd / nearest_bs_pdf(r, bs) - 1.0));
        }
        const double ks = ks_exact(mc::sample_nearest_bs_distances(Scenario::baseline(r0), n, opt.seed + 1),
                                   [&](double r) { return 1.0 - nearest_bs_ccdf(r, bs); });
        record(std::abs(norm_bs - 1.0) <= 1e-3 && nonincreasing(c) && worst <= 1e-4 && ks < 0.02,
               printf_string("R0=%.1f km nearest BS: int f = %.8f, monotone CCDF, fd rel err %.2e, KS %.4f", r0, norm_bs,
                             worst, ks));
    }

    // Serving distances under association.
    for (double r0 : kHoles) {
        const Scenario sc = Scenario::baseline(r0);
        const Association a(sc);
        const double norm_ds = integrate_panels([&](double t) { return a.serving_sat_pdf_angle(t); }, a.sat_angle_breaks(),
                                                Tolerance{1e-10, 1e-9}, "serving satellite normalization (angle)")
                                   .value;
        std::vector<double> rb = a.profile().boundaries();
        const double norm_ds_r = integrate_panels([&](double r) { return a.serving_sat_pdf(r); }, rb,
                                                  Tolerance{1e-8, 1e-7}, "serving satellite normalization")
                                     .value;
        const double norm_db = a.p_bs() > 0.0
                                   ? integrate_panels([&](double r) { return a.serving_bs_pdf(r); }, a.bs_breaks(),
                                                      Tolerance{1e-10, 1e-9}, "serving BS normalization")
                                         .value
                                   : 1.0;
        record(std::abs(norm_ds - 1.0) <= 1e-3 && std::abs(norm_ds_r - 1.0) <= 1e-3 && std::abs(norm_db - 1.0) <= 1e-3,
               printf_string("R0=%.1f km int f_dsat = %.6f (in r: %.6f), int f_dbs = %.6f", r0, norm_ds, norm_ds_r, norm_db));

        // Analytic CDFs on grids, built from cumulative panel integrals.
        std::vector<double> grid_t = linspace(0.0, a.t_visible(), 241);
        std::vector<double> grid_s, cdf_s;
        double acc = 0.0;
        for (std::size_t i = 0; i < grid_t.size(); ++i) {
            if (i > 0) {
                acc += integrate_panels([&](double t) { return a.serving_sat_pdf_angle(t); },
                                        panel_breaks(grid_t[i - 1], grid_t[i], a.sat_angle_breaks()), Tolerance{1e-11, 1e-9})
                           .value;
            }
            grid_s.push_back(distance_at_orbit_angle(grid_t[i], sc.geom));
            cdf_s.push_back(acc);
        }
        std::vector<double> grid_b = linspace(r0, a.bs_upper(), 241);
        std::vector<double> cdf_b;
        acc = 0.0;
        for (std::size_t i = 0; i < grid_b.size(); ++i) {
            if (i > 0) {
                acc += integrate_panels([&](double r) { return a.serving_bs_pdf(r); },
                                        panel_breaks(grid_b[i - 1], grid_b[i], a.bs_breaks()), Tolerance{1e-11, 1e-9})
                           .value;
            }
            cdf_b.push_back(acc);
        }
        mc::ServingDistances d = mc::sample_serving_distances(sc, n, opt.seed + 2);
        std::sort(d.sat_km.begin(), d.sat_km.end());
        std::sort(d.bs_km.begin(), d.bs_km.end());
        const double ks_ds = ks_on_grid(d.sat_km, grid_s, cdf_s);
        const double ks_db = ks_on_grid(d.bs_km, grid_b, cdf_b);
        record(ks_ds < 0.02 && ks_db < 0.02,
               printf_string("R0=%.1f km serving KS: satellite %.4f (%zu), BS %.4f (%zu)", r0, ks_ds, d.sat_km.size(), ks_db,
                             d.bs_km.size()));
    }
    res.seconds = timer.seconds();
    return res;
}

CriterionResult check_laplace(const ValidationOptions& opt) {
    Timer timer;
    CriterionResult res{6, "Laplace transforms: 1 at s=0, nonincreasing in s, alpha_bs=4 closed form to 1e-8", true, {}, 0};
    auto record = [&](bool ok, const std::string& line) {
        res.passed = res.passed && ok;
        res.details.push_back(line + (ok ? " ok" : " FAIL"));
    };
    const Scenario sc = Scenario::baseline(0.1);
    const SatNetworkParams sat = sc.sat();
    const double r_mid = 0.5 * (sat.cap.r_min_km + sat.cap.r_max_km);

    // s scales at which a link at r_mid (satellite) or 1 km (BS) matters.
    const double s_sat = 1.0 / (sc.bias.p_t_sat_w * sc.sat_link_gain(r_mid));
    const double s_bs = 1.0 / (sc.bias.p_t_bs_w * sc.bs_link_gain(1.0));
    for (double r : {sat.cap.r_min_km, r_mid, sat.cap.r_max_km}) {
        std::vector<double> v;
        for (double s : logspace(s_sat * 1e-4, s_sat * 1e4, 50)) v.push_back(laplace_interference_sat(s, r, sc));
        const double at0 = laplace_interference_sat(0.0, r, sc);
        record(at0 == 1.0 && nonincreasing(v) && v.back() > 0.0,
               printf_string("satellite Laplace, r_excl=%.1f km: L(0)=%.1f, range [%.3e, %.4f]", r, at0, v.back(), v.front()));
    }
    for (double a : {0.0, 0.1, 0.7, 2.0}) {
        std::vector<double> v;
        for (double s : logspace(s_bs * 1e-4, s_bs * 1e4, 50)) v.push_back(laplace_interference_bs(s, a, sc));
        const double at0 = laplace_interference_bs(0.0, a, sc);
        record(at0 == 1.0 && nonincreasing(v) && v.back() > 0.0,
               printf_string("BS Laplace, r_excl=%.1f km: L(0)=%.1f, range [%.3e, %.4f]", a, at0, v.back(), v.front()));
    }
    double worst = 0.0;
    for (double a : {0.05, 0.1, 0.7, 2.0, 10.0}) {
        for (double s : logspace(s_bs * 1e-6, s_bs * 1e6, 25)) {
            const double q = bs_interference_integral(s, a, sc, Tolerance{0.0, 1e-12});
            const double c = bs_interference_integral_alpha4(s, a, sc);
            worst = std::max(worst, std::abs(q - c) / c);
        }
    }
    record(worst <= 1e-8, printf_string("alpha_bs=4 quadrature vs closed form: max rel diff %.2e", worst));

    const double s_test = db_to_linear(0.0) / (sc.bias.p_t_sat_w * sc.sat_link_gain(r_mid)) * sc.channel.a_const / sc.channel.beta;
    const double an = laplace_interference_sat(s_test, r_mid, sc);
    const double sim = mc::estimate_laplace_sat(s_test, r_mid, sc, static_cast<std::size_t>(opt.samples), opt.seed + 3);
    record(std::abs(an - sim) <= 0.01, printf_string("satellite Laplace at 0 dB, r=%.0f km: analytic %.4f, MC %.4f", r_mid, an, sim));
    res.seconds = timer.seconds();
    return res;
}

CriterionResult check_limits(const ValidationOptions&) {
    Timer timer;
    CriterionResult res{7, "shared-frequency limits: lambda_bs -> 0 gives the satellite branch, lambda_sat -> 0 terrestrial", true, {}, 0};
    for (double r0 : kHoles) {
        double worst_bs = 0.0, worst_sat = 0.0;
        Scenario no_bs = Scenario::baseline(r0);
        no_bs.lambda_bs = 1e-9;
        Scenario no_sat = Scenario::baseline(r0);
        no_sat.lambda_sat = 1e-9;
        const auto shared_no_bs = coverage_curve(no_bs, FrequencyMode::Shared, gammas_linear());
        const auto shared_no_sat = coverage_curve(no_sat, FrequencyMode::Shared, gammas_linear());
        for (std::size_t j = 0; j < kGammaDb.size(); ++j) {
            const CoverageQuery qb{gammas_linear()[j], FrequencyMode::Distinct, no_bs, {}};
            const CoverageQuery qs{gammas_linear()[j], FrequencyMode::Distinct, no_sat, {}};
            worst_bs = std::max(worst_bs, std::abs(shared_no_bs[j].total - cov_distinct_sat(qb)));
            worst_sat = std::max(worst_sat, std::abs(shared_no_sat[j].total - cov_distinct_bs(qs)));
        }
        const bool ok = worst_bs <= 1e-3 && worst_sat <= 1e-3;
        res.passed = res.passed && ok;
        res.details.push_back(printf_string("R0=%.1f km: |shared - distinct sat| at lambda_bs=1e-9: %.2e; "
                                            "|shared - terrestrial| at lambda_sat=1e-9: %.2e %s",
                                            r0, worst_bs, worst_sat, ok ? "ok" : "FAIL"));
    }
    res.seconds = timer.seconds();
    return res;
}

CriterionResult check_determinism(const ValidationOptions& opt) {
    Timer timer;
    CriterionResult res{8, "identical config and seed give byte-identical CSV across runs and thread counts", true, {}, 0};
    ScenarioConfig cfg = ScenarioConfig::defaults();
    cfg.run = RunKind::Both;
    cfg.values["run.trials"] = static_cast<double>(std::min<std::uint64_t>(opt.trials, 2000));
    cfg.values["run.seed"] = static_cast<double>(opt.seed % 1000000);
    cfg.sweeps.emplace_back("terrestrial.hole_radius_km", std::vector<double>{0.1, 0.7});
    const std::string a = to_csv(run_sweep(cfg, 1));
    const std::string b = to_csv(run_sweep(cfg, 1));
    const std::string c = to_csv(run_sweep(cfg, 3));
    cfg.run = RunKind::Analytic;
    const std::string d = to_csv(run_sweep(cfg, 1));
    const std::string e = to_csv(run_sweep(cfg, 4));
    res.passed = a == b && a == c && d == e;
    res.details.push_back(printf_string("MC+analytic sweep (%zu bytes): repeat %s, 1 vs 3 threads %s", a.size(),
                                        a == b ? "identical" : "DIFFERENT", a == c ? "identical" : "DIFFERENT"));
    res.details.push_back(printf_string("analytic sweep (%zu bytes): 1 vs 4 threads %s", d.size(),
                                        d == e ? "identical" : "DIFFERENT"));
    res.seconds = timer.seconds();
    return res;
}

std::vector<CriterionResult> run_acceptance(const ValidationOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result) {
    using Check = CriterionResult (*)(const ValidationOptions&);
    const Check checks[] = {&check_cross_oracle, &check_stiran_vs_terrestrial, &check_zenith_orbit_best,
                            &check_association_trends, &check_distributions, &check_laplace,
                            &check_limits, &check_determinism};
    std::vector<CriterionResult> out;
    for (Check c : checks) {
        out.push_back(c(opt));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string format_result(const CriterionResult& r, bool with_details) {
    std::string s = printf_string("[%s] %d %s (%.1f s)\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds);
    if (with_details) {
        for (const auto& d : r.details) s += "       " + d + "\n";
    }
    return s;
}

}  // namespace stiran
