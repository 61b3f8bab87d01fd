#include "padic/forms.hpp"

namespace padic {

DiagonalForm form_matrix(KappaLabel label, OddPrime p) {
    FormConstants c = find_constants(p);
    switch (label) {
        case KappaLabel::MinusV:
            return DiagonalForm{label, p.value(), {1, c.minus_v()}};
        case KappaLabel::P:
            return DiagonalForm{label, p.value(), {1, p.value()}};
        case KappaLabel::UP:
            return DiagonalForm{label, p.value(), {c.u, p.value()}};
        case KappaLabel::Plus3:
            return DiagonalForm{label, p.value(), {1, c.minus_v(), p.value()}};
    }
    throw StructureError("bad kappa label");
}

ResidueInt evaluate(const DiagonalForm& q, std::span<const ResidueInt> x) {
    if (static_cast<int>(x.size()) != q.dim())
        throw StructureError("vector dimension != form dimension");
    for (const ResidueInt& xi : x) {
        if (xi.prime() != q.p || xi.level() != x.front().level())
            throw StructureError("vector entries must share (p, level)");
    }
    OddPrime p(q.p);
    int level = x.front().level();
    Int acc = 0;
    for (int i = 0; i < q.dim(); ++i)
        acc += Int(q.entries[static_cast<std::size_t>(i)]) * x[static_cast<std::size_t>(i)].value() *
               x[static_cast<std::size_t>(i)].value();
    return ResidueInt(p, level, acc);
}

bool is_special_orthogonal(const ResidueMatrix& l, const DiagonalForm& q) {
    if (l.prime() != q.p) throw StructureError("matrix prime != form prime");
    if (l.dim() != q.dim()) throw StructureError("matrix dimension != form dimension");
    Int m = l.modulus();
    int d = l.dim();
    // (L^T A L)_{jk} = sum_i a_i l_{ij} l_{ik}; target is A itself.
    for (int j = 0; j < d; ++j) {
        for (int k = j; k < d; ++k) {
            Int acc = 0;
            for (int i = 0; i < d; ++i) acc += Int(q.entries[static_cast<std::size_t>(i)]) * l.at(i, j) * l.at(i, k);
            Int target = (j == k) ? Int(q.entries[static_cast<std::size_t>(j)]) : Int(0);
            if (mod_floor(acc - target, m) != 0) return false;
        }
    }
    return l.det() == 1;
}

bool definiteness_witness_mod_p(const DiagonalForm& q) {
    std::int64_t p = q.p;
    Int p2 = Int(p) * p;
    int d = q.dim();
    std::vector<std::int64_t> x(static_cast<std::size_t>(d), 0);
    while (true) {
        // advance odometer over [0,p)^d
        int i = 0;
        while (i < d) {
            if (++x[static_cast<std::size_t>(i)] < p) break;
            x[static_cast<std::size_t>(i)] = 0;
            ++i;
        }
        if (i == d) break;  // wrapped around to all zeros
        Int value = 0;
        for (int k = 0; k < d; ++k)
            value += Int(q.entries[static_cast<std::size_t>(k)]) * x[static_cast<std::size_t>(k)] *
                     x[static_cast<std::size_t>(k)];
        if (mod_floor(value, p2) == 0) return false;
    }
    return true;
}

DiagonalForm indefinite_fixture(OddPrime p) {
    // diag(1,-1): isotropic at (1,1) over any Z/pZ.
    return DiagonalForm{KappaLabel::MinusV, p.value(), {1, -1}};
}

}  // namespace padic
