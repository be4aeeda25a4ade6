#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "stiran/config.hpp"
#include "stiran/errors.hpp"
#include "stiran/sweep.hpp"

using namespace stiran;

namespace {
std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string l;
    while (std::getline(ss, l)) out.push_back(l);
    return out;
}
}  // namespace

TEST_CASE("empty config gives the baseline") {
    auto cfg = parse_config("");
    CHECK(cfg.get("density.sat_per_km") == 0.001);
    CHECK(cfg.get("density.bs_per_km2") == 1.0);
    CHECK(cfg.get("orbit.polar_angle_deg") == 90.0);
    CHECK(cfg.get("orbit.min_elevation_deg") == 10.0);
    CHECK(cfg.get("orbit.altitude_km") == 500.0);
    CHECK(cfg.get("antenna.gmax_dbi") == 35.0);
    CHECK(cfg.get("noise.bandwidth_hz") == 5e6);
    CHECK(cfg.get("noise.figure_db") == 11.0);
    CHECK(cfg.thresholds_db.size() == 7);
    CHECK(cfg.mode == ModeSelection::Both);
    CHECK(cfg.run == RunKind::Analytic);

    auto sc = cfg.scenario();
    auto base = Scenario::baseline();
    CHECK(sc.lambda_sat == base.lambda_sat);
    CHECK(sc.bias.p_t_sat_w == doctest::Approx(base.bias.p_t_sat_w).epsilon(1e-15));
    CHECK(sc.noise.sigma2_w == doctest::Approx(base.noise.sigma2_w).epsilon(1e-15));
    CHECK(sc.geom.polar_angle_rad == doctest::Approx(std::numbers::pi / 2));
}

TEST_CASE("parsing") {
    auto cfg = parse_config(
        "# comment\n"
        "\n"
        "orbit.polar_angle_deg = 60\n"
        "mode = shared   \n"
        "run.kind = both\n"
        "sinr.thresholds_db = -5, 0, 5\n"
        "sweep.density.bs_per_km2 = 0.5, 1, 2\n"
        "mc.fading_shape = integer\n");
    CHECK(cfg.scenario().geom.polar_angle_rad == doctest::Approx(std::numbers::pi / 3));
    CHECK(cfg.mode == ModeSelection::Shared);
    CHECK(cfg.run == RunKind::Both);
    CHECK(cfg.thresholds_db == std::vector<double>{-5, 0, 5});
    REQUIRE(cfg.sweeps.size() == 1);
    CHECK(cfg.sweeps[0].first == "density.bs_per_km2");
    CHECK(cfg.sweeps[0].second.size() == 3);
    CHECK(cfg.fading_shape == mc::FadingShape::Integer);
}

TEST_CASE("parse errors carry line and key") {
    try {
        parse_config("orbit.altitude_km = 500\nbogus.key = 3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.key() == "bogus.key");
    }
    CHECK_THROWS_AS(parse_config("orbit.altitude_km = abc\n"), ParseError);
    CHECK_THROWS_AS(parse_config("orbit.altitude_km = 1\norbit.altitude_km = 2\n"), ParseError);
    CHECK_THROWS_AS(parse_config("no equals sign\n"), ParseError);
    CHECK_THROWS_AS(parse_config("mode = sometimes\n"), ParseError);
    CHECK_THROWS_AS(parse_config("sweep.run.trials = 1, 2\n"), ParseError);
    CHECK_THROWS_AS(parse_config("sweep.nothing = 1, 2\n"), ParseError);
    CHECK_THROWS_AS(load_config("/nonexistent/dir/x.conf"), IoError);
}

TEST_CASE("validation lists every problem") {
    try {
        parse_config("density.sat_per_km = -1\ndensity.bs_per_km2 = -2\nchannel.alpha_bs = 2\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.problems().size() == 3);
    }
    CHECK_THROWS_AS(parse_config("sweep.terrestrial.hole_radius_km = 0.1, -0.5\n"), ValidationError);
    auto cfg = parse_config("");
    CHECK_NOTHROW(validate(cfg));
    cfg.values["run.trials"] = 0.5;
    CHECK_THROWS_AS(validate(cfg), ValidationError);
}

TEST_CASE("config hash follows content") {
    auto a = parse_config("orbit.altitude_km = 500\n");
    auto b = parse_config("");
    auto c = parse_config("orbit.altitude_km = 600\n");
    CHECK(fnv1a(a.canonical()) == fnv1a(b.canonical()));
    CHECK(fnv1a(a.canonical()) != fnv1a(c.canonical()));
    CHECK(fnv1a("") == 0xcbf29ce484222325ull);
}

TEST_CASE("sweep rows and CSV") {
    auto cfg = parse_config(
        "sweep.orbit.polar_angle_deg = 90, 80\n"
        "mode = distinct\n"
        "sinr.thresholds_db = 0, 10\n");
    auto res = run_sweep(cfg, 2);
    REQUIRE(res.rows.size() == 4);
    CHECK(res.rows[0].sweep_values[0] == 90.0);
    CHECK(res.rows[2].sweep_values[0] == 80.0);
    CHECK(res.rows[0].gamma_db == 0.0);
    CHECK(res.rows[1].gamma_db == 10.0);
    // coverage decreases away from the zenith-passing orbit
    CHECK(res.rows[0].analytic_total >= res.rows[2].analytic_total);
    CHECK(std::isnan(res.rows[0].mc_total));

    const std::string csv = to_csv(res);
    auto ls = lines(csv);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0].rfind("# stiran ", 0) == 0);
    CHECK(ls[0].find("config_hash=") != std::string::npos);
    CHECK(ls[0].find("seed=1") != std::string::npos);
    auto header = split(ls[1]);
    CHECK(header == csv_columns(res.sweep_keys));
    CHECK(header[0] == "orbit.polar_angle_deg");

    // values round-trip bit for bit
    for (std::size_t i = 0; i < res.rows.size(); ++i) {
        auto cells = split(ls[i + 2]);
        REQUIRE(cells.size() == header.size());
        CHECK(std::strtod(cells[3].c_str(), nullptr) == res.rows[i].analytic_total);
        CHECK(std::strtod(cells[4].c_str(), nullptr) == res.rows[i].p_vis);
        CHECK(cells[10].empty());
        CHECK(cells.back() == "ok");
    }
}

TEST_CASE("empty sweep result writes header and metadata only") {
    SweepResult r;
    auto ls = lines(to_csv(r));
    CHECK(ls.size() == 2);
}

TEST_CASE("Monte-Carlo rows and determinism") {
    auto cfg = parse_config(
        "run.kind = both\n"
        "run.trials = 1500\n"
        "run.seed = 77\n"
        "sinr.thresholds_db = 0\n");
    auto a = run_sweep(cfg, 1);
    auto b = run_sweep(cfg, 4);
    REQUIRE(a.rows.size() == 2);
    for (const auto& r : a.rows) {
        CHECK(r.mc_trials == 1500);
        CHECK(r.mc_total >= 0.0);
        CHECK(r.abs_diff() == doctest::Approx(std::abs(r.analytic_total - r.mc_total)));
        CHECK(r.within_tolerance() == (r.abs_diff() <= kCrossOracleTolerance ? 1.0 : 0.0));
    }
    CHECK(to_csv(a) == to_csv(b));

    const std::string path = "test_config_out.csv";
    emit_csv(a, path);
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str() == to_csv(a));
    std::remove(path.c_str());
    CHECK_THROWS_AS(emit_csv(a, "/nonexistent/dir/out.csv"), IoError);
}

TEST_CASE("numerical failures become flagged rows") {
    // the BS link gain underflows at the distances this density implies
    auto cfg = parse_config("sweep.density.bs_per_km2 = 1, 1e-300\nmode = distinct\nsinr.thresholds_db = 0\n");
    SweepResult res;
    CHECK_NOTHROW(res = run_sweep(cfg, 1));
    REQUIRE(res.rows.size() == 2);
    CHECK(res.rows[0].status == "ok");
    CHECK(res.rows[1].status == "numerical_error");
    CHECK_FALSE(res.rows[1].message.empty());
    CHECK(res.has_numerical_errors());
    const std::string csv = to_csv(res);
    CHECK(csv.find("numerical_error: ") != std::string::npos);
}

TEST_CASE("a degenerate orbit plane leaves only the terrestrial tier") {
    auto cfg = parse_config("sweep.orbit.polar_angle_deg = 90, 0\nmode = shared\nsinr.thresholds_db = 0\n");
    auto res = run_sweep(cfg, 1);
    REQUIRE(res.rows.size() == 2);
    CHECK(res.rows[1].status == "ok");
    CHECK(res.rows[1].p_vis == 0.0);
    CHECK(res.rows[1].analytic_total == res.rows[1].branches.invis_bs);
}
