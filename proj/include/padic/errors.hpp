#pragma once

#include <stdexcept>
#include <string>

namespace padic {

// Base class for every error the library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mixing residues of different (p, level), mismatched dimensions, bad labels.
struct StructureError : Error {
    using Error::Error;
};

// Inverting an element divisible by p.
struct NonUnitError : Error {
    using Error::Error;
};

// Asking for more precision than a value carries.
struct PrecisionExceeded : Error {
    using Error::Error;
};

// Valuation of an all-zero tower: only a lower bound is certified.
struct ValuationUnknown : Error {
    int lower_bound;
    explicit ValuationUnknown(int bound)
        : Error("valuation undetermined at this precision (>= " + std::to_string(bound) + ")"),
          lower_bound(bound) {}
};

// A branched parameter violating its branch's congruence constraint.
struct InvalidBranchParam : Error {
    using Error::Error;
};

// An enumeration or scan whose size exceeds the configured budget.
struct CapacityExceeded : Error {
    unsigned long long required;
    unsigned long long budget;
    CapacityExceeded(const std::string& what, unsigned long long required_, unsigned long long budget_)
        : Error(what + " (required " + std::to_string(required_) + ", budget " + std::to_string(budget_) + ")"),
          required(required_), budget(budget_) {}
};

// Hensel input that is not a solution at the level it claims.
struct NotASolutionModPn : Error {
    using Error::Error;
};

// Lift residuals violating the solvability congruence (reachable only on
// non-solution inputs for odd p).
struct ConstraintViolated : Error {
    using Error::Error;
};

// A group-table product falling outside the table. Unreachable for correct
// tables; a test failure if thrown.
struct ClosureViolation : Error {
    using Error::Error;
};

// A matrix claimed as a group element that is not one.
struct NotAGroupElement : Error {
    using Error::Error;
};

// A level-indexed family of sets that is not coherent under projection.
struct InconsistentFamily : Error {
    using Error::Error;
};

}  // namespace padic
