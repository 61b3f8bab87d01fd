// Acceptance suite: runs every quantitative criterion at its stated grid and
// tolerance (exact equality throughout) and prints one pass/fail line per
// criterion. Exit code is the number of failing criteria.

#include <cstring>
#include <iostream>

#include "padic/verify.hpp"

int main(int argc, char** argv) {
    padic::verify::Options opts;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            // trimmed statistical sample size for local iteration
            opts.sample_draws = 20000;
        }
    }

    int failures = 0;
    for (int criterion = 1; criterion <= 8; ++criterion) {
        padic::verify::CriterionReport report = padic::verify::run_criterion(criterion, opts);
        bool ok = report.passed() && !report.any_skipped();
        std::cout << "criterion " << criterion << " (" << report.title << "): "
                  << (ok ? "PASS" : "FAIL") << " [" << report.checks.size() << " checks]"
                  << std::endl;
        if (!ok) {
            ++failures;
            for (const auto& c : report.checks) {
                if (c.status != padic::verify::Status::Pass) {
                    std::cout << "    [" << padic::verify::status_name(c.status) << "] " << c.name
                              << ": " << c.claim << "\n      computed: " << c.computed
                              << "\n      expected: " << c.expected << std::endl;
                }
            }
        }
    }
    return failures;
}
