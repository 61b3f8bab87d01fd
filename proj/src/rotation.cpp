#include "padic/rotation.hpp"

namespace padic {

namespace {

void require_zero_mod_p(const ResidueInt& sigma, const char* where) {
    if (sigma.value() % sigma.prime() != 0)
        throw InvalidBranchParam(std::string(where) +
                                 ": flipped branch requires the parameter to vanish mod p");
}

struct BlockEntries {
    ResidueInt diag;    // both diagonal entries of the 2x2 block
    ResidueInt upper;   // entry multiplying the second basis vector into the first
    ResidueInt lower;
};

// Entries A/D, B/D, C/D with D a unit by construction; throws through
// ResidueInt::inv if that ever failed (unreachable for odd p).
BlockEntries block(const Int& a, const Int& b, const Int& c, const Int& d, OddPrime p, int level) {
    ResidueInt den(p, level, d);
    ResidueInt inv = den.inv();
    return BlockEntries{ResidueInt(p, level, a) * inv, ResidueInt(p, level, b) * inv,
                        ResidueInt(p, level, c) * inv};
}

}  // namespace

ResidueMatrix rot2(KappaLabel kappa, const BranchedParam& param) {
    if (dimension_of(kappa) != 2) throw StructureError("rot2 needs a d=2 label");
    OddPrime p(param.sigma.prime());
    int level = param.sigma.level();
    FormConstants fc = find_constants(p);
    const Int& s = param.sigma.value();
    Int s2 = s * s;

    BlockEntries e = [&] {
        switch (kappa) {
            case KappaLabel::MinusV:
                // alpha = -v: diag (1+v s^2)/(1-v s^2), off -2 alpha s and 2 s.
                return block(1 + fc.v * s2, 2 * fc.v * s, 2 * s, 1 - fc.v * s2, p, level);
            case KappaLabel::P:
                return block(1 - p.value() * s2, -2 * p.value() * s, 2 * s, 1 + p.value() * s2, p, level);
            case KappaLabel::UP:
                // alpha = p/u, cleared through u + p s^2.
                return block(fc.u - p.value() * s2, -2 * p.value() * s, 2 * fc.u * s,
                             fc.u + p.value() * s2, p, level);
            default:
                throw StructureError("rot2 needs a d=2 label");
        }
    }();

    ResidueMatrix m(p, level, 2);
    m.set(0, 0, e.diag.value());
    m.set(0, 1, e.upper.value());
    m.set(1, 0, e.lower.value());
    m.set(1, 1, e.diag.value());

    if (param.branch == Branch::Flipped) {
        if (kappa == KappaLabel::MinusV) require_zero_mod_p(param.sigma, "rot2(-v)");
        return -m;
    }
    return m;
}

ResidueMatrix rot3_axis(Axis axis, const BranchedParam& param) {
    OddPrime p(param.sigma.prime());
    int level = param.sigma.level();
    FormConstants fc = find_constants(p);
    const Int& s = param.sigma.value();
    Int s2 = s * s;
    bool neg = param.branch == Branch::Flipped;

    ResidueMatrix m = ResidueMatrix::identity(p, level, 3);
    switch (axis) {
        case Axis::X: {
            // alpha = -p/v, cleared through v - p xi^2.
            BlockEntries e = block(fc.v + p.value() * s2, 2 * p.value() * s, 2 * fc.v * s,
                                   fc.v - p.value() * s2, p, level);
            Int sign = neg ? Int(-1) : Int(1);
            m.set(1, 1, sign * e.diag.value());
            m.set(1, 2, sign * e.upper.value());
            m.set(2, 1, sign * e.lower.value());
            m.set(2, 2, sign * e.diag.value());
            return m;
        }
        case Axis::Y: {
            BlockEntries e = block(1 - p.value() * s2, -2 * p.value() * s, 2 * s,
                                   1 + p.value() * s2, p, level);
            Int sign = neg ? Int(-1) : Int(1);
            m.set(0, 0, sign * e.diag.value());
            m.set(0, 2, sign * e.upper.value());
            m.set(2, 0, sign * e.lower.value());
            m.set(2, 2, sign * e.diag.value());
            return m;
        }
        case Axis::Z: {
            if (neg) require_zero_mod_p(param.sigma, "rot3_axis(z)");
            BlockEntries e = block(1 + fc.v * s2, 2 * fc.v * s, 2 * s, 1 - fc.v * s2, p, level);
            Int sign = neg ? Int(-1) : Int(1);
            m.set(0, 0, sign * e.diag.value());
            m.set(0, 1, sign * e.upper.value());
            m.set(1, 0, sign * e.lower.value());
            m.set(1, 1, sign * e.diag.value());
            return m;
        }
    }
    throw StructureError("bad axis");
}

ResidueMatrix cardano_compose(const CardanoTriple& t) {
    if (t.eta.sigma.prime() != t.xi.sigma.prime() || t.zeta.sigma.prime() != t.xi.sigma.prime() ||
        t.eta.sigma.level() != t.xi.sigma.level() || t.zeta.sigma.level() != t.xi.sigma.level())
        throw StructureError("cardano triple components must share (p, level)");
    return rot3_axis(Axis::X, t.xi) * rot3_axis(Axis::Y, t.eta) * rot3_axis(Axis::Z, t.zeta);
}

CardanoTriple cardano_partner(const CardanoTriple& t) {
    OddPrime p(t.prime());
    int level = t.level();
    FormConstants fc = find_constants(p);

    auto flipped = [](Branch b) { return b == Branch::Principal ? Branch::Flipped : Branch::Principal; };

    BranchedParam xi{t.xi.sigma, flipped(t.xi.branch)};
    BranchedParam eta{-t.eta.sigma, flipped(t.eta.branch)};

    BranchedParam zeta = [&] {
        const ResidueInt& z = t.zeta.sigma;
        if (z.value() % p.value() == 0) {
            return BranchedParam{z, flipped(t.zeta.branch)};
        }
        ResidueInt v(p, level, fc.v);
        return BranchedParam{(v * z).inv(), t.zeta.branch};
    }();

    return CardanoTriple{xi, eta, zeta};
}

}  // namespace padic
