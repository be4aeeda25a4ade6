#include "stiran/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "stiran/distributions.hpp"
#include "stiran/errors.hpp"
#include "stiran/simd/kernels.hpp"

namespace stiran::mc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double sat_shape(const Scenario& sc, FadingShape shape) {
    return shape == FadingShape::Integer ? static_cast<double>(sc.channel.xi_int) : sc.channel.xi_exact;
}

/// Runs trials [0, n) over `threads` workers. Each worker owns an accumulator
/// and scratch; accumulators are merged in worker order. Because every
/// accumulator holds integer counts the merge order does not matter.
template <typename Acc, typename Fn>
Acc run_trials(std::uint64_t n, unsigned threads, Fn fn, Acc init) {
    threads = std::max(1u, threads);
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(n, 1)));
    std::vector<Acc> accs(threads, init);
    auto work = [&](unsigned w) {
        const std::uint64_t lo = n * w / threads;
        const std::uint64_t hi = n * (w + 1) / threads;
        Realization scratch;
        for (std::uint64_t i = lo; i < hi; ++i) {
            fn(i, accs[w], scratch);
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    Acc total = init;
    for (const Acc& a : accs) total += a;
    return total;
}

struct Counts {
    std::vector<std::uint64_t> c;
    Counts& operator+=(const Counts& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
};

double bs_radius_for(const Scenario& sc, const McOptions& opt) {
    return opt.bs_truncation_km > 0.0 ? opt.bs_truncation_km : bs_truncation_radius(sc);
}

void sample_satellites(const Scenario& sc, CounterRng& rng, FadingShape shape, Realization& out) {
    out.sat_angles.clear();
    out.sat_fadings.clear();
    const double mean = 2.0 * std::numbers::pi * sc.geom.orbit_radius_km * sc.lambda_sat;
    if (!(mean > 0.0)) return;
    std::poisson_distribution<long> count(mean);
    const long n = count(rng);
    std::gamma_distribution<double> fade(sat_shape(sc, shape), sc.channel.beta);
    for (long i = 0; i < n; ++i) {
        out.sat_angles.push_back(2.0 * std::numbers::pi * rng.uniform());
        out.sat_fadings.push_back(fade(rng));
    }
}

void sample_bs(const Scenario& sc, CounterRng& rng, double radius_km, Realization& out) {
    out.bs_points.clear();
    out.bs_fadings.clear();
    const double r0 = sc.hole_radius_km;
    if (!(sc.lambda_bs > 0.0) || !(radius_km > r0)) return;
    const double r0_sq = r0 * r0;
    const double span = radius_km * radius_km - r0_sq;
    std::poisson_distribution<long> count(sc.lambda_bs * std::numbers::pi * span);
    const long n = count(rng);
    std::exponential_distribution<double> fade(1.0);
    out.bs_points.resize(static_cast<std::size_t>(n));
    out.bs_fadings.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        // Uniform on the annulus: r^2 is uniform on [R_0^2, R_t^2].
        out.bs_points[i].radius_km = std::sqrt(r0_sq + span * rng.uniform());
        out.bs_points[i].bearing_rad = 2.0 * std::numbers::pi * rng.uniform();
        out.bs_fadings[i] = fade(rng);
    }
}

/// Mean-power association metric of a satellite as seen from the user.
double sat_mean_power(const Scenario& sc, const SatView& v) {
    return sc.bias.rho_sat * sc.bias.p_t_sat_w * mean_sat_fading(sc.channel) *
           antenna_gain_linear(v.off_axis_rad, sc.pattern) * std::pow(v.distance_km / sc.pathloss_ref_km, -sc.channel.alpha_sat);
}

double bs_mean_power(const Scenario& sc, double r_km) {
    return sc.bias.rho_bs * sc.bias.p_t_bs_w * std::pow(r_km / sc.pathloss_ref_km, -sc.channel.alpha_bs);
}

/// Index of the nearest visible satellite or npos.
std::size_t nearest_visible(const std::vector<SatView>& views) {
    std::size_t best = views.size();
    for (std::size_t i = 0; i < views.size(); ++i) {
        if (views[i].visible && (best == views.size() || views[i].distance_km < views[best].distance_km)) best = i;
    }
    return best;
}

std::vector<SatView> views_of(const Scenario& sc, const Realization& rz) {
    std::vector<SatView> v;
    v.reserve(rz.sat_angles.size());
    for (double a : rz.sat_angles) v.push_back(geometry_of(a, sc.geom));
    return v;
}

std::size_t nearest_bs(const Realization& rz, std::vector<double>& radii) {
    radii.resize(rz.bs_points.size());
    for (std::size_t i = 0; i < radii.size(); ++i) radii[i] = rz.bs_points[i].radius_km;
    if (radii.empty()) return 0;
    return simd::active_kernels().argmin(radii.data(), radii.size());
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream)
    : state_(mix64(mix64(seed ^ kGolden) + mix64(trial + kGolden) * 3 + stream)) {}

CounterRng::result_type CounterRng::operator()() {
    state_ += kGolden;
    return mix64(state_);
}

double CounterRng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

Estimate Estimate::from_counts(std::uint64_t successes, std::uint64_t trials, std::uint64_t seed) {
    Estimate e;
    e.successes = successes;
    e.trials = trials;
    e.seed = seed;
    if (trials > 0) {
        e.value = static_cast<double>(successes) / static_cast<double>(trials);
        e.half_width_95 = 1.96 * std::sqrt(e.value * (1.0 - e.value) / static_cast<double>(trials));
    }
    return e;
}

SatView geometry_of(double angle_rad, const OrbitGeometry& geom) {
    const double th = geom.polar_angle_rad;
    const double ph = geom.azimuth_rad;
    const double R = geom.orbit_radius_km;
    // Orbit normal n and an orthonormal basis (e1, e2) of the orbit plane,
    // e1 pointing at the orbit's highest point.
    const double n[3] = {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
    const double e1[3] = {-std::cos(th) * std::cos(ph), -std::cos(th) * std::sin(ph), std::sin(th)};
    const double e2[3] = {n[1] * e1[2] - n[2] * e1[1], n[2] * e1[0] - n[0] * e1[2], n[0] * e1[1] - n[1] * e1[0]};
    const double ca = std::cos(angle_rad);
    const double sa = std::sin(angle_rad);
    const double p[3] = {R * (ca * e1[0] + sa * e2[0]), R * (ca * e1[1] + sa * e2[1]), R * (ca * e1[2] + sa * e2[2])};
    const double u[3] = {0.0, 0.0, geom.earth_radius_km};
    const double d[3] = {u[0] - p[0], u[1] - p[1], u[2] - p[2]};
    SatView v;
    v.distance_km = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    v.visible = p[2] > visible_cap(geom).cap_base_km;
    // Angle between the nadir direction -p and the user direction d.
    const double c = -(p[0] * d[0] + p[1] * d[1] + p[2] * d[2]) / (R * v.distance_km);
    v.off_axis_rad = std::acos(std::clamp(c, -1.0, 1.0));
    return v;
}

double bs_truncation_radius(const Scenario& sc) {
    const double ratio = sc.bias.p_t_bs_w / (1e-6 * sc.noise.sigma2_w);
    return std::max(sc.hole_radius_km, sc.pathloss_ref_km * std::pow(ratio, 1.0 / sc.channel.alpha_bs));
}

void sample_realization(const Scenario& sc, CounterRng& rng, double bs_radius_km, FadingShape shape,
                        Realization& out) {
    sample_satellites(sc, rng, shape, out);
    sample_bs(sc, rng, bs_radius_km, out);
}

Realization sample_realization(const Scenario& sc, CounterRng& rng, double bs_radius_km, FadingShape shape) {
    Realization rz;
    sample_realization(sc, rng, bs_radius_km, shape, rz);
    return rz;
}

TrialOutcome evaluate_trial(const Scenario& sc, const Realization& rz) {
    TrialOutcome out;
    const double sigma2 = sc.noise.sigma2_w;
    const double p_sat = sc.bias.p_t_sat_w;
    const double p_bs = sc.bias.p_t_bs_w;
    const simd::KernelTable& k = simd::active_kernels();

    const std::vector<SatView> views = views_of(sc, rz);
    std::vector<double> rx(views.size(), 0.0);  // received satellite powers
    for (std::size_t i = 0; i < views.size(); ++i) {
        if (!views[i].visible) continue;
        ++out.visible_count;
        rx[i] = p_sat * rz.sat_fadings[i] * antenna_gain_linear(views[i].off_axis_rad, sc.pattern) *
                std::pow(views[i].distance_km / sc.pathloss_ref_km, -sc.channel.alpha_sat);
    }
    const std::size_t s_idx = nearest_visible(views);
    const bool has_sat = s_idx < views.size();
    // Interference from the other visible satellites, summed directly rather
    // than by subtraction so the server is excluded exactly.
    double sat_others = 0.0;
    for (std::size_t i = 0; i < views.size(); ++i) {
        if (views[i].visible && i != s_idx) sat_others += rx[i];
    }

    std::vector<double> radii;
    const std::size_t n_bs = rz.bs_points.size();
    const std::size_t b_idx = nearest_bs(rz, radii);
    const bool has_bs = n_bs > 0;
    double bs_rx = 0.0;
    double bs_others = 0.0;
    if (has_bs) {
        const double a = sc.channel.alpha_bs;
        const double ref = sc.pathloss_ref_km;
        bs_others = p_bs * (k.path_loss_sum(radii.data(), rz.bs_fadings.data(), b_idx, a, ref) +
                            k.path_loss_sum(radii.data() + b_idx + 1, rz.bs_fadings.data() + b_idx + 1,
                                            n_bs - b_idx - 1, a, ref));
        bs_rx = p_bs * rz.bs_fadings[b_idx] * std::pow(radii[b_idx] / ref, -a);
    }
    if (has_sat) out.sinr_sat_distinct = rx[s_idx] / (sat_others + sigma2);
    if (has_bs) out.sinr_bs_distinct = bs_rx / (bs_others + sigma2);

    bool sat_serves = false;
    if (has_sat && has_bs) {
        sat_serves = sat_mean_power(sc, views[s_idx]) >= bs_mean_power(sc, radii[b_idx]);
    } else {
        sat_serves = has_sat;
    }
    if (sat_serves) {
        out.server = Server::Satellite;
        out.server_index = s_idx;
        out.signal_w = rx[s_idx];
        out.interference_sat_w = sat_others;
        out.interference_bs_w = has_bs ? bs_others + bs_rx : 0.0;
    } else if (has_bs) {
        out.server = Server::Bs;
        out.server_index = b_idx;
        out.signal_w = bs_rx;
        out.interference_sat_w = has_sat ? sat_others + rx[s_idx] : 0.0;
        out.interference_bs_w = bs_others;
    }
    if (out.server != Server::None) {
        out.sinr_shared = out.signal_w / (out.interference_sat_w + out.interference_bs_w + sigma2);
    }
    return out;
}

Estimate estimate_visibility(const Scenario& sc, const McOptions& opt) {
    auto fn = [&](std::uint64_t i, Counts& acc, Realization& rz) {
        CounterRng rng(opt.seed, i);
        sample_satellites(sc, rng, opt.fading_shape, rz);
        for (double a : rz.sat_angles) {
            if (geometry_of(a, sc.geom).visible) {
                ++acc.c[0];
                break;
            }
        }
    };
    const Counts c = run_trials(opt.trials, opt.threads, fn, Counts{{0}});
    return Estimate::from_counts(c.c[0], opt.trials, opt.seed);
}

AssociationEstimate estimate_association(const Scenario& sc, const McOptions& opt) {
    const double radius = bs_integration_limit(sc.bs());
    auto fn = [&](std::uint64_t i, Counts& acc, Realization& rz) {
        CounterRng rng(opt.seed, i);
        sample_realization(sc, rng, radius, opt.fading_shape, rz);
        const std::vector<SatView> views = views_of(sc, rz);
        const std::size_t s = nearest_visible(views);
        if (s == views.size()) return;
        ++acc.c[0];
        std::vector<double> radii;
        const std::size_t b = nearest_bs(rz, radii);
        if (radii.empty() || sat_mean_power(sc, views[s]) >= bs_mean_power(sc, radii[b])) ++acc.c[1];
    };
    const Counts c = run_trials(opt.trials, opt.threads, fn, Counts{{0, 0}});
    AssociationEstimate out;
    out.visible_trials = c.c[0];
    out.p_sat = Estimate::from_counts(c.c[1], c.c[0], opt.seed);
    out.p_bs = Estimate::from_counts(c.c[0] - c.c[1], c.c[0], opt.seed);
    return out;
}

CoverageCurve estimate_coverage_curves(const Scenario& sc, const std::vector<double>& thresholds_linear,
                                       const McOptions& opt) {
    const std::size_t g = thresholds_linear.size();
    const double radius = bs_radius_for(sc, opt);
    // Layout: [visible, sat-served, distinct successes (g), shared successes (g)]
    auto fn = [&](std::uint64_t i, Counts& acc, Realization& rz) {
        CounterRng rng(opt.seed, i);
        sample_realization(sc, rng, radius, opt.fading_shape, rz);
        const TrialOutcome t = evaluate_trial(sc, rz);
        if (t.visible_count > 0) {
            ++acc.c[0];
            if (t.server == Server::Satellite) ++acc.c[1];
        }
        for (std::size_t j = 0; j < g; ++j) {
            const double gamma = thresholds_linear[j];
            if (t.sinr_sat_distinct > gamma || t.sinr_bs_distinct > gamma) ++acc.c[2 + j];
            if (t.sinr_shared > gamma) ++acc.c[2 + g + j];
        }
    };
    const Counts c = run_trials(opt.trials, opt.threads, fn, Counts{std::vector<std::uint64_t>(2 + 2 * g, 0)});
    CoverageCurve out;
    out.bs_truncation_km = radius;
    out.p_vis = Estimate::from_counts(c.c[0], opt.trials, opt.seed);
    out.assoc_sat = Estimate::from_counts(c.c[1], c.c[0], opt.seed);
    for (std::size_t j = 0; j < g; ++j) {
        CoveragePoint p;
        p.threshold_linear = thresholds_linear[j];
        p.distinct = Estimate::from_counts(c.c[2 + j], opt.trials, opt.seed);
        p.shared = Estimate::from_counts(c.c[2 + g + j], opt.trials, opt.seed);
        out.points.push_back(p);
    }
    return out;
}

Estimate estimate_coverage(const Scenario& sc, FrequencyMode mode, double threshold_linear, const McOptions& opt) {
    const CoverageCurve c = estimate_coverage_curves(sc, {threshold_linear}, opt);
    return mode == FrequencyMode::Distinct ? c.points[0].distinct : c.points[0].shared;
}

std::vector<double> sample_nearest_sat_distances(const Scenario& sc, std::size_t samples, std::uint64_t seed) {
    std::vector<double> out;
    if (!(visibility_probability(sc.sat()) > 0.0)) {
        throw InvalidArgument("no satellite can be visible in this geometry");
    }
    Realization rz;
    for (std::uint64_t i = 0; out.size() < samples; ++i) {
        CounterRng rng(seed, i);
        sample_satellites(sc, rng, FadingShape::Exact, rz);
        const std::vector<SatView> views = views_of(sc, rz);
        const std::size_t s = nearest_visible(views);
        if (s < views.size()) out.push_back(views[s].distance_km);
    }
    return out;
}

std::vector<double> sample_nearest_bs_distances(const Scenario& sc, std::size_t samples, std::uint64_t seed) {
    std::vector<double> out;
    if (!(sc.lambda_bs > 0.0)) {
        throw InvalidArgument("BS density is zero");
    }
    const double radius = bs_integration_limit(sc.bs());
    Realization rz;
    std::vector<double> radii;
    for (std::uint64_t i = 0; out.size() < samples; ++i) {
        CounterRng rng(seed, i);
        sample_bs(sc, rng, radius, rz);
        if (rz.bs_points.empty()) continue;
        out.push_back(rz.bs_points[nearest_bs(rz, radii)].radius_km);
    }
    return out;
}

ServingDistances sample_serving_distances(const Scenario& sc, std::size_t trials, std::uint64_t seed) {
    ServingDistances out;
    const double radius = bs_integration_limit(sc.bs());
    Realization rz;
    std::vector<double> radii;
    std::size_t visible = 0;
    for (std::uint64_t i = 0; visible < trials; ++i) {
        CounterRng rng(seed, i);
        sample_realization(sc, rng, radius, FadingShape::Exact, rz);
        const std::vector<SatView> views = views_of(sc, rz);
        const std::size_t s = nearest_visible(views);
        if (s == views.size()) continue;
        ++visible;
        const std::size_t b = nearest_bs(rz, radii);
        if (radii.empty() || sat_mean_power(sc, views[s]) >= bs_mean_power(sc, radii[b])) {
            out.sat_km.push_back(views[s].distance_km);
        } else {
            out.bs_km.push_back(radii[b]);
        }
    }
    return out;
}

double estimate_laplace_sat(double s, double r_excl_km, const Scenario& sc, std::size_t trials, std::uint64_t seed) {
    Realization rz;
    double acc = 0.0;
    for (std::uint64_t i = 0; i < trials; ++i) {
        CounterRng rng(seed, i);
        sample_satellites(sc, rng, FadingShape::Integer, rz);
        double interference = 0.0;
        for (std::size_t j = 0; j < rz.sat_angles.size(); ++j) {
            const SatView v = geometry_of(rz.sat_angles[j], sc.geom);
            if (!v.visible || v.distance_km <= r_excl_km) continue;
            interference += sc.bias.p_t_sat_w * rz.sat_fadings[j] * antenna_gain_linear(v.off_axis_rad, sc.pattern) *
                            std::pow(v.distance_km / sc.pathloss_ref_km, -sc.channel.alpha_sat);
        }
        acc += std::exp(-s * interference);
    }
    return acc / static_cast<double>(trials);
}

}  // namespace stiran::mc
