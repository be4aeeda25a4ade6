// Command line front end: analytic, mc, sweep, validate.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "stiran/config.hpp"
#include "stiran/errors.hpp"
#include "stiran/sweep.hpp"
#include "stiran/validation.hpp"
#include "stiran/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;

struct Common {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::string out;
    unsigned threads = 1;
};

void add_common(CLI::App* cmd, Common& c, bool with_config) {
    if (with_config) cmd->add_option("--config", c.config, "config file (defaults used when omitted)")->check(CLI::ExistingFile);
    cmd->add_option("--seed", c.seed, "Monte-Carlo seed, overrides run.seed");
    cmd->add_option("--trials", c.trials, "Monte-Carlo trials, overrides run.trials")->check(CLI::PositiveNumber);
    cmd->add_option("--out", c.out, "output path (stdout when omitted)");
    cmd->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1u, 256u));
}

int run_sweep_command(const Common& c, std::optional<stiran::RunKind> kind) {
    stiran::ScenarioConfig cfg = c.config.empty() ? stiran::ScenarioConfig::defaults() : stiran::load_config(c.config);
    if (kind) cfg.run = *kind;
    if (c.seed) cfg.values["run.seed"] = static_cast<double>(*c.seed);
    if (c.trials) cfg.values["run.trials"] = static_cast<double>(*c.trials);
    stiran::validate(cfg);

    const stiran::SweepResult res = stiran::run_sweep(cfg, c.threads);
    if (c.out.empty()) {
        stiran::emit_csv(res, std::cout);
    } else {
        stiran::emit_csv(res, c.out);
    }
    for (const auto& row : res.rows) {
        if (row.status != "ok") std::cerr << "numerical error: " << row.message << "\n";
    }
    return res.has_numerical_errors() ? kExitNumerical : kExitOk;
}

int run_validate(const Common& c, bool details) {
    stiran::ValidationOptions opt;
    if (c.seed) opt.seed = *c.seed;
    if (c.trials) {
        opt.trials = *c.trials;
        opt.samples = *c.trials;
    }
    opt.threads = c.threads;
    std::FILE* out = stdout;
    if (!c.out.empty()) {
        out = std::fopen(c.out.c_str(), "w");
        if (!out) throw stiran::IoError("cannot open " + c.out);
    }
    bool all = true;
    stiran::run_acceptance(opt, [&](const stiran::CriterionResult& r) {
        all = all && r.passed;
        std::fputs(stiran::format_result(r, details).c_str(), out);
        std::fflush(out);
    });
    std::fprintf(out, "%s\n", all ? "all criteria passed" : "some criteria failed");
    if (out != stdout) std::fclose(out);
    return all ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coverage of satellite-terrestrial integrated networks: analytic model and Monte-Carlo simulator"};
    app.set_version_flag("--version", std::string(stiran::kVersion));
    app.require_subcommand(1);

    Common analytic, mc, sweep, val;
    bool details = false;
    auto* a = app.add_subcommand("analytic", "analytic coverage for the config's sweep, as CSV");
    add_common(a, analytic, true);
    auto* m = app.add_subcommand("mc", "Monte-Carlo coverage for the config's sweep, as CSV");
    add_common(m, mc, true);
    auto* s = app.add_subcommand("sweep", "run the config's sweep with its run.kind (analytic, montecarlo or both)");
    add_common(s, sweep, true);
    auto* v = app.add_subcommand("validate", "run the acceptance suite and print a pass/fail table");
    add_common(v, val, false);
    v->add_flag("--details", details, "print per-check numbers");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*a) return run_sweep_command(analytic, stiran::RunKind::Analytic);
        if (*m) return run_sweep_command(mc, stiran::RunKind::MonteCarlo);
        if (*s) return run_sweep_command(sweep, std::nullopt);
        if (*v) return run_validate(val, details);
    } catch (const stiran::ValidationError& e) {
        std::cerr << "invalid config:\n";
        for (const auto& p : e.problems()) std::cerr << "  " << p << "\n";
        return kExitValidation;
    } catch (const stiran::ParseError& e) {
        std::cerr << "config parse error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const stiran::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const stiran::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
