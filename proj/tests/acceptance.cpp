// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "stiran/validation.hpp"

int main(int argc, char** argv) {
    stiran::ValidationOptions opt;
    if (const char* t = std::getenv("STIRAN_ACCEPTANCE_THREADS")) opt.threads = static_cast<unsigned>(std::atoi(t));
    const bool details = argc > 1 && std::string(argv[1]) == "--details";
    bool all = true;
    stiran::run_acceptance(opt, [&](const stiran::CriterionResult& r) {
        all = all && r.passed;
        std::fputs(stiran::format_result(r, true).c_str(), stdout);
        std::fflush(stdout);
    });
    (void)details;
    std::puts(all ? "acceptance: all criteria passed" : "acceptance: some criteria failed");
    return all ? 0 : 1;
}
