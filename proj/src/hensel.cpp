#include "padic/hensel.hpp"

#include <algorithm>
#include <limits>
#include <memory>

#include "padic/forms.hpp"

namespace padic {

namespace {

// Scalar arithmetic mod p on int64 representatives (p < 2^31, products safe).
struct ModP {
    std::int64_t p;
    std::int64_t red(std::int64_t x) const {
        std::int64_t r = x % p;
        return r < 0 ? r + p : r;
    }
    std::int64_t add(std::int64_t a, std::int64_t b) const { return red(a + b); }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return red(a - b); }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return red(red(a) * red(b)); }
    std::int64_t neg(std::int64_t a) const { return red(-a); }
    std::int64_t inv(std::int64_t a) const {
        return inv_mod(Int(red(a)), Int(p)).convert_to<std::int64_t>();
    }
    std::int64_t div(std::int64_t a, std::int64_t b) const { return mul(a, inv(b)); }
    std::int64_t half(std::int64_t a) const { return div(a, 2); }
};

struct Shape2 {
    std::int64_t a, b;  // kappa = -v: (a, vb; b, a)
    std::int64_t s, c;  // kappa in {p, up}: (s, 0; c, s)
};

Shape2 read_shape_2d(const ResidueMatrix& l, KappaLabel kappa, const FormConstants& fc) {
    ModP m{l.prime()};
    auto at = [&](int i, int j) { return (l.at(i, j) % l.prime()).convert_to<std::int64_t>(); };
    Shape2 sh{};
    if (kappa == KappaLabel::MinusV) {
        sh.a = at(0, 0);
        sh.b = at(1, 0);
        if (at(1, 1) != sh.a || at(0, 1) != m.mul(fc.v, sh.b) ||
            m.sub(m.mul(sh.a, sh.a), m.mul(fc.v, m.mul(sh.b, sh.b))) != 1)
            throw StructureError("level-1 shape violated for kappa=-v");
    } else {
        sh.s = at(0, 0);
        sh.c = at(1, 0);
        if ((sh.s != 1 && sh.s != l.prime() - 1) || at(1, 1) != sh.s || at(0, 1) != 0)
            throw StructureError("level-1 shape violated for kappa in {p, up}");
    }
    return sh;
}

struct Shape3 {
    std::int64_t s, a, b, c, d;  // (a, svb, 0; b, sa, 0; c, d, s)
};

Shape3 read_shape_3d(const ResidueMatrix& l, const FormConstants& fc) {
    ModP m{l.prime()};
    auto at = [&](int i, int j) { return (l.at(i, j) % l.prime()).convert_to<std::int64_t>(); };
    Shape3 sh{};
    sh.s = at(2, 2);
    sh.a = at(0, 0);
    sh.b = at(1, 0);
    sh.c = at(2, 0);
    sh.d = at(2, 1);
    bool ok = (sh.s == 1 || sh.s == l.prime() - 1) && at(0, 2) == 0 && at(1, 2) == 0 &&
              at(1, 1) == m.mul(sh.s, sh.a) && at(0, 1) == m.mul(sh.s, m.mul(fc.v, sh.b)) &&
              m.sub(m.mul(sh.a, sh.a), m.mul(fc.v, m.mul(sh.b, sh.b))) == 1;
    if (!ok) throw StructureError("level-1 shape violated for d=3");
    return sh;
}

// value of one defining polynomial minus its target, as an exact integer.
std::vector<Int> defining_deviations(const ResidueMatrix& l, const DiagonalForm& q) {
    int d = l.dim();
    std::vector<Int> out;
    // norms, column j
    for (int j = 0; j < d; ++j) {
        Int acc = 0;
        for (int i = 0; i < d; ++i) acc += Int(q.entries[static_cast<std::size_t>(i)]) * l.at(i, j) * l.at(i, j);
        out.push_back(acc - q.entries[static_cast<std::size_t>(j)]);
    }
    // pairings (1,2), then for d=3 (1,3), (2,3)
    for (int j = 0; j < d; ++j) {
        for (int k = j + 1; k < d; ++k) {
            Int acc = 0;
            for (int i = 0; i < d; ++i) acc += Int(q.entries[static_cast<std::size_t>(i)]) * l.at(i, j) * l.at(i, k);
            out.push_back(acc);
        }
    }
    // det() reduces mod p^{n+1} already; deviations only matter there.
    out.push_back(l.det() - 1);
    return out;
}

LiftResiduals residuals_of_rep(const ResidueMatrix& rep, KappaLabel kappa) {
    if (rep.level() < 2)
        throw StructureError("extract_residuals needs a representative at level >= 2");
    int n = rep.level() - 1;
    const DiagonalForm q = form_matrix(kappa, OddPrime(rep.prime()));
    if (q.dim() != rep.dim()) throw StructureError("kappa label does not match matrix dimension");
    if (!is_special_orthogonal(rep.project(n), q))
        throw NotASolutionModPn("matrix is not a solution mod p^" + std::to_string(n));

    Int pn = pow_int(rep.prime(), n);
    Int pn1 = pn * rep.prime();
    std::vector<Int> dev = defining_deviations(rep, q);

    LiftResiduals r;
    r.p = rep.prime();
    r.d = rep.dim();
    for (std::size_t i = 0; i + 1 < dev.size(); ++i) {
        Int w = mod_floor(dev[i], pn1);
        if (w % pn != 0) throw StructureError("internal: residual not divisible by p^n");
        r.lambda.push_back((w / pn).convert_to<std::int64_t>());
    }
    Int wd = mod_floor(dev.back(), pn1);
    if (wd % pn != 0) throw StructureError("internal: determinant residual not divisible by p^n");
    r.lambda_det = (wd / pn).convert_to<std::int64_t>();

    FormConstants fc = find_constants(OddPrime(rep.prime()));
    ModP m{rep.prime()};
    if (rep.dim() == 2) {
        if (kappa == KappaLabel::MinusV)
            r.constraint_ok = m.sub(m.sub(m.mul(fc.v, r.lambda[0]), r.lambda[1]),
                                    m.mul(2, m.mul(fc.v, r.lambda_det))) == 0;
        else
            r.constraint_ok = r.lambda[1] == 0;
    } else {
        r.constraint_ok = r.lambda[2] == 0;
    }
    return r;
}

ResidueMatrix apply_correction(const ResidueMatrix& l, const std::vector<std::int64_t>& z) {
    OddPrime p(l.prime());
    int n = l.level();
    Int pn = pow_int(l.prime(), n);
    std::vector<Int> entries;
    entries.reserve(static_cast<std::size_t>(l.dim() * l.dim()));
    for (int i = 0; i < l.dim(); ++i)
        for (int j = 0; j < l.dim(); ++j)
            entries.push_back(l.at(i, j) + pn * z[static_cast<std::size_t>(i * l.dim() + j)]);
    return ResidueMatrix(p, n + 1, l.dim(), std::move(entries));
}

void verify_lift(const ResidueMatrix& lifted, const DiagonalForm& q) {
    if (!is_special_orthogonal(lifted, q))
        throw StructureError("internal: lift formula produced a non-solution at level " +
                             std::to_string(lifted.level()));
}

}  // namespace

LiftResiduals extract_residuals(const ResidueMatrix& rep, KappaLabel kappa) {
    return residuals_of_rep(rep, kappa);
}

std::vector<ResidueMatrix> lift_2d(const ResidueMatrix& solution, KappaLabel kappa) {
    if (solution.dim() != 2 || dimension_of(kappa) != 2)
        throw StructureError("lift_2d needs a 2x2 matrix and a d=2 label");
    OddPrime p(solution.prime());
    // Zero-extended representative at level n+1; its lambdas drive Z.
    ResidueMatrix rep(p, solution.level() + 1, 2,
                      {solution.at(0, 0), solution.at(0, 1), solution.at(1, 0), solution.at(1, 1)});
    LiftResiduals r = residuals_of_rep(rep, kappa);
    if (!r.constraint_ok)
        throw ConstraintViolated("lift constraint violated: lambda = (" +
                                 std::to_string(r.lambda[0]) + "," + std::to_string(r.lambda[1]) +
                                 "," + std::to_string(r.lambda[2]) + "), lambda_d = " +
                                 std::to_string(r.lambda_det));

    FormConstants fc = find_constants(p);
    ModP m{p.value()};
    Shape2 sh = read_shape_2d(solution, kappa, fc);
    const std::int64_t l1 = r.lambda[0], l2 = r.lambda[1], l3 = r.lambda[2], ld = r.lambda_det;
    const DiagonalForm q = form_matrix(kappa, p);

    std::vector<ResidueMatrix> lifts;
    lifts.reserve(static_cast<std::size_t>(p.value()));
    for (std::int64_t f = 0; f < p.value(); ++f) {
        std::int64_t z11, z12, z21, z22;
        if (kappa == KappaLabel::MinusV) {
            std::int64_t vp = m.red(fc.v);
            if (sh.b == 0) {
                z21 = f;
                z11 = m.mul(m.neg(m.half(sh.a)), l1);
                z22 = m.mul(m.div(sh.a, m.mul(2, vp)), l2);
                z12 = m.sub(m.mul(vp, z21), m.mul(sh.a, l3));
            } else {
                z11 = f;
                z21 = m.add(m.mul(m.div(sh.a, m.mul(vp, sh.b)), z11), m.div(m.half(l1), m.mul(vp, sh.b)));
                z12 = m.sub(m.add(m.mul(m.div(sh.a, sh.b), z11),
                                  m.add(m.mul(m.div(m.mul(sh.a, sh.a), m.mul(2, sh.b)), l1),
                                        m.mul(m.div(m.sub(m.mul(sh.a, sh.a), 1), m.mul(2, m.mul(vp, sh.b))),
                                              l2))),
                            m.mul(sh.a, l3));
                z22 = m.sub(m.add(z11, m.add(m.mul(m.half(sh.a), l1), m.div(m.mul(sh.a, l2), m.mul(2, vp)))),
                            m.mul(sh.b, l3));
            }
        } else {
            std::int64_t a1 = q.entries[0];  // 1 or u
            z21 = f;
            z11 = m.neg(m.mul(sh.s, m.div(m.half(l1), a1)));
            z12 = m.neg(m.mul(sh.s, m.div(l3, a1)));
            z22 = m.sub(m.sub(m.mul(sh.s, m.div(m.half(l1), a1)), m.mul(m.div(sh.c, a1), l3)),
                        m.mul(sh.s, ld));
        }
        ResidueMatrix lifted = apply_correction(solution, {z11, z12, z21, z22});
        verify_lift(lifted, q);
        lifts.push_back(std::move(lifted));
    }
    return lifts;
}

namespace {

struct Lift3Core {
    ModP m;
    Shape3 sh;
    std::int64_t vp;
    std::int64_t l1, l2, l4, l5, l6, ld;

    // Entries that do not depend on the free digits.
    std::int64_t z13() const {
        if (sh.b == 0) return m.mul(m.neg(sh.a), l5);
        return m.sub(m.mul(sh.s, m.mul(sh.b, l6)), m.mul(sh.a, l5));
    }
    std::int64_t z23() const {
        if (sh.b == 0) return m.mul(m.div(m.mul(sh.s, sh.a), vp), l6);
        return m.sub(m.div(m.mul(sh.s, m.mul(sh.a, l6)), vp), m.mul(sh.b, l5));
    }
    std::int64_t z33() const {
        // (s/2) l1 - (s/(2v)) l2 - c l5 + (d/v) l6 - s ld
        std::int64_t t = m.mul(m.half(sh.s), l1);
        t = m.sub(t, m.mul(m.div(sh.s, m.mul(2, vp)), l2));
        t = m.sub(t, m.mul(sh.c, l5));
        t = m.add(t, m.mul(m.div(sh.d, vp), l6));
        t = m.sub(t, m.mul(sh.s, ld));
        return t;
    }

    // main is z21 when b == 0, z11 otherwise.
    void fill(std::int64_t main, std::int64_t z31, std::int64_t z32,
              std::vector<std::int64_t>& z) const {
        std::int64_t z11, z12, z21, z22;
        if (sh.b == 0) {
            z21 = main;
            z11 = m.mul(m.neg(m.half(sh.a)), l1);
            z22 = m.mul(m.div(m.mul(sh.s, sh.a), m.mul(2, vp)), l2);
            z12 = m.sub(m.mul(sh.s, m.mul(vp, z21)), m.mul(sh.a, l4));
        } else {
            z11 = main;
            z21 = m.add(m.mul(m.div(sh.a, m.mul(vp, sh.b)), z11), m.div(m.half(l1), m.mul(vp, sh.b)));
            z12 = m.sub(m.add(m.mul(m.div(m.mul(sh.s, sh.a), sh.b), z11),
                              m.add(m.mul(m.div(m.mul(sh.s, m.mul(sh.a, sh.a)), m.mul(2, sh.b)), l1),
                                    m.mul(m.half(m.mul(sh.s, sh.b)), l2))),
                        m.mul(sh.a, l4));
            z22 = m.sub(m.add(m.mul(sh.s, z11),
                              m.mul(m.half(m.mul(sh.s, sh.a)), m.add(l1, m.div(l2, vp)))),
                        m.mul(sh.b, l4));
        }
        z = {z11, z12, z13(), z21, z22, z23(), z31, z32, z33()};
    }
};

Lift3Core make_lift3_core(const ResidueMatrix& solution, const LiftResiduals& r,
                          const FormConstants& fc) {
    ModP m{solution.prime()};
    Lift3Core core{m, read_shape_3d(solution, fc), m.red(fc.v),
                   r.lambda[0], r.lambda[1], r.lambda[3], r.lambda[4], r.lambda[5], r.lambda_det};
    return core;
}

}  // namespace

std::vector<ResidueMatrix> lift_3d(const ResidueMatrix& solution) {
    if (solution.dim() != 3) throw StructureError("lift_3d needs a 3x3 matrix");
    OddPrime p(solution.prime());
    std::vector<Int> rep_entries;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rep_entries.push_back(solution.at(i, j));
    ResidueMatrix rep(p, solution.level() + 1, 3, std::move(rep_entries));
    LiftResiduals r = residuals_of_rep(rep, KappaLabel::Plus3);
    if (!r.constraint_ok)
        throw ConstraintViolated("lift constraint violated: lambda_3 = " + std::to_string(r.lambda[2]));

    FormConstants fc = find_constants(p);
    Lift3Core core = make_lift3_core(solution, r, fc);
    const DiagonalForm q = form_matrix(KappaLabel::Plus3, p);

    std::vector<ResidueMatrix> lifts;
    lifts.reserve(static_cast<std::size_t>(p.value() * p.value() * p.value()));
    std::vector<std::int64_t> z;
    for (std::int64_t main = 0; main < p.value(); ++main) {
        for (std::int64_t z31 = 0; z31 < p.value(); ++z31) {
            for (std::int64_t z32 = 0; z32 < p.value(); ++z32) {
                core.fill(main, z31, z32, z);
                ResidueMatrix lifted = apply_correction(solution, z);
                verify_lift(lifted, q);
                lifts.push_back(std::move(lifted));
            }
        }
    }
    return lifts;
}

std::vector<ResidueMatrix> lift_once(const ResidueMatrix& solution, KappaLabel kappa) {
    if (solution.dim() == 2) return lift_2d(solution, kappa);
    return lift_3d(solution);
}

LiftChooser LiftChooser::zeros() {
    return LiftChooser([](std::int64_t) { return std::int64_t(0); });
}

LiftChooser LiftChooser::seeded(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return LiftChooser([rng](std::int64_t p) {
        // Rejection sampling keeps the stream implementation-independent.
        std::uint64_t bound = static_cast<std::uint64_t>(p);
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = (*rng)();
        } while (x >= limit);
        return static_cast<std::int64_t>(x % bound);
    });
}

ResidueMatrix lift_to_precision(const ResidueMatrix& solution, KappaLabel kappa, int target_level,
                                LiftChooser chooser) {
    if (target_level < solution.level())
        throw StructureError("target level below the solution's level");
    ResidueMatrix current = solution;
    OddPrime p(solution.prime());
    FormConstants fc = find_constants(p);
    const DiagonalForm q = form_matrix(kappa, p);
    while (current.level() < target_level) {
        if (current.dim() == 2) {
            std::vector<ResidueMatrix> lifts = lift_2d(current, kappa);
            current = lifts[static_cast<std::size_t>(chooser.pick(p.value()))];
        } else {
            // Recreate one lift directly from chosen free digits.
            std::vector<Int> rep_entries;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) rep_entries.push_back(current.at(i, j));
            ResidueMatrix rep(p, current.level() + 1, 3, std::move(rep_entries));
            LiftResiduals r = residuals_of_rep(rep, KappaLabel::Plus3);
            if (!r.constraint_ok)
                throw ConstraintViolated("lift constraint violated during tower construction");
            Lift3Core core = make_lift3_core(current, r, fc);
            std::vector<std::int64_t> z;
            std::int64_t main = chooser.pick(p.value());
            std::int64_t z31 = chooser.pick(p.value());
            std::int64_t z32 = chooser.pick(p.value());
            core.fill(main, z31, z32, z);
            current = apply_correction(current, z);
            verify_lift(current, q);
        }
    }
    return current;
}

}  // namespace padic
