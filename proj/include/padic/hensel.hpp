#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "padic/groups.hpp"
#include "padic/matrix.hpp"

namespace padic {

// The mod-p residuals of the defining polynomials, extracted from a level
// n+1 representative of a level-n solution: value(poly) == target + lambda*p^n
// mod p^{n+1}. For d=2 that is (lambda_1, lambda_2, lambda_3) plus the
// determinant residual; for d=3 the three norms and three pairings
// (lambda_4 <-> (1,2), lambda_5 <-> (1,3), lambda_6 <-> (2,3)) plus the
// determinant residual.
struct LiftResiduals {
    std::int64_t p;
    int d;
    std::vector<std::int64_t> lambda;
    std::int64_t lambda_det;

    // The solvability congruence: v*l1 - l2 - 2*v*ld == 0 (kappa = -v),
    // l2 == 0 (kappa in {p, p/u}), l3 == 0 (d = 3). Always satisfied by
    // genuine solutions for odd p.
    bool constraint_ok;
};

// rep is a level-(n+1) matrix whose level-n reduction must satisfy the
// defining conditions (NotASolutionModPn otherwise). Exact integer
// evaluation; the division by p^n is asserted exact.
LiftResiduals extract_residuals(const ResidueMatrix& rep, KappaLabel kappa);

// All p lifts of a d=2 solution mod p^n to solutions mod p^{n+1}, ordered by
// the free digit. Each result is verified special-orthogonal at the new
// level. ConstraintViolated if the residual congruence fails (non-solution
// inputs only).
std::vector<ResidueMatrix> lift_2d(const ResidueMatrix& solution, KappaLabel kappa);

// All p^3 lifts of a d=3 solution, ordered lexicographically by the free
// digits.
std::vector<ResidueMatrix> lift_3d(const ResidueMatrix& solution);

std::vector<ResidueMatrix> lift_once(const ResidueMatrix& solution, KappaLabel kappa);

// Free-digit policy for iterated lifting: zero digits give a deterministic
// canonical tower, a seeded stream gives a uniform sample of the fiber.
class LiftChooser {
public:
    static LiftChooser zeros();
    static LiftChooser seeded(std::uint64_t seed);
    explicit LiftChooser(std::function<std::int64_t(std::int64_t)> pick) : pick_(std::move(pick)) {}
    std::int64_t pick(std::int64_t p) { return pick_(p); }

private:
    std::function<std::int64_t(std::int64_t)> pick_;
};

// Iterates single-level lifting from solution.level() up to target_level.
ResidueMatrix lift_to_precision(const ResidueMatrix& solution, KappaLabel kappa, int target_level,
                                LiftChooser chooser);

}  // namespace padic
