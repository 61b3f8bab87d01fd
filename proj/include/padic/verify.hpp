#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "padic/groups.hpp"

namespace padic::verify {

enum class Status { Pass, Fail, Skipped };

struct CheckResult {
    std::string name;
    std::string claim;
    std::string computed;
    std::string expected;
    Status status;
};

struct Options {
    Budgets budgets;
    std::optional<std::int64_t> only_p;
    std::vector<std::string> only_checks;  // keywords: orders, oracle, hensel, cardano,
                                           // ball, invariance, integral, sampler
    std::uint64_t sample_draws = 100000;
    std::uint64_t base_seed = 20240813;
    bool tamper = false;  // negative control: deliberately wrong expectation
};

struct CriterionReport {
    int number = 0;
    std::string title;
    std::string keyword;
    std::vector<CheckResult> checks;

    bool passed() const;
    bool any_skipped() const;
};

CriterionReport run_criterion(int number, const Options& opts);
std::vector<CriterionReport> run_all(const Options& opts);

std::string status_name(Status s);

}  // namespace padic::verify
