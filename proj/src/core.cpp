#include "padic/core.hpp"

#include <algorithm>

namespace padic {

OddPrime::OddPrime(std::int64_t p) : p_(p) {
    if (p <= 2) throw StructureError("p must be an odd prime > 2, got " + std::to_string(p));
    if (p > 0x7fffffffLL) throw StructureError("p too large for this artifact (p < 2^31)");
    if (!is_prime_i64(p)) throw StructureError(std::to_string(p) + " is not prime");
}

int dimension_of(KappaLabel label) {
    return label == KappaLabel::Plus3 ? 3 : 2;
}

std::string kappa_name(KappaLabel label) {
    switch (label) {
        case KappaLabel::MinusV: return "-v";
        case KappaLabel::P: return "p";
        case KappaLabel::UP: return "up";
        case KappaLabel::Plus3: return "+3";
    }
    throw StructureError("bad kappa label");
}

KappaLabel kappa_from_name(const std::string& name) {
    if (name == "-v" || name == "mv" || name == "minus-v") return KappaLabel::MinusV;
    if (name == "p") return KappaLabel::P;
    if (name == "up") return KappaLabel::UP;
    if (name == "+3" || name == "3d" || name == "plus3") return KappaLabel::Plus3;
    throw StructureError("unknown kappa label '" + name + "'");
}

namespace {

void require_same_ring(const ResidueInt& a, const ResidueInt& b) {
    if (a.prime() != b.prime() || a.level() != b.level())
        throw StructureError("residue (p, level) mismatch: (" + std::to_string(a.prime()) + "," +
                             std::to_string(a.level()) + ") vs (" + std::to_string(b.prime()) + "," +
                             std::to_string(b.level()) + ")");
}

}  // namespace

ResidueInt::ResidueInt(OddPrime p, int level, Int value) : p_(p.value()), level_(level) {
    if (level < 1) throw StructureError("residue level must be >= 1");
    value_ = mod_floor(value, pow_int(p_, level_));
}

ResidueInt operator+(const ResidueInt& a, const ResidueInt& b) {
    require_same_ring(a, b);
    return ResidueInt(OddPrime(a.p_), a.level_, a.value_ + b.value_);
}

ResidueInt operator-(const ResidueInt& a, const ResidueInt& b) {
    require_same_ring(a, b);
    return ResidueInt(OddPrime(a.p_), a.level_, a.value_ - b.value_);
}

ResidueInt operator*(const ResidueInt& a, const ResidueInt& b) {
    require_same_ring(a, b);
    return ResidueInt(OddPrime(a.p_), a.level_, a.value_ * b.value_);
}

ResidueInt ResidueInt::operator-() const {
    return ResidueInt(OddPrime(p_), level_, -value_);
}

ResidueInt ResidueInt::inv() const {
    if (value_ % p_ == 0)
        throw NonUnitError("not a unit: " + value_.str() + " mod " + std::to_string(p_) + "^" +
                           std::to_string(level_));
    return ResidueInt(OddPrime(p_), level_, inv_mod(value_, modulus()));
}

ResidueInt ResidueInt::pow(std::uint64_t e) const {
    ResidueInt result = one(OddPrime(p_), level_);
    ResidueInt base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

ResidueInt ResidueInt::project(int target_level) const {
    if (target_level > level_)
        throw PrecisionExceeded("cannot project level " + std::to_string(level_) + " to finer level " +
                                std::to_string(target_level));
    return ResidueInt(OddPrime(p_), target_level, value_);
}

std::vector<int> ResidueInt::digits() const {
    std::vector<int> out(static_cast<std::size_t>(level_));
    Int v = value_;
    for (int i = 0; i < level_; ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(v % p_);
        v /= p_;
    }
    return out;
}

std::string ResidueInt::digit_string() const {
    std::string s;
    if (p_ <= 36) {
        for (int d : digits()) s += digit_char(d);
    } else {
        bool first = true;
        for (int d : digits()) {
            if (!first) s += '.';
            s += std::to_string(d);
            first = false;
        }
    }
    return s;
}

bool operator==(const ResidueInt& a, const ResidueInt& b) {
    return a.p_ == b.p_ && a.level_ == b.level_ && a.value_ == b.value_;
}

PadicTower::PadicTower(OddPrime p, int precision, Int value) : p_(p.value()), precision_(precision) {
    if (precision < 1) throw StructureError("tower precision must be >= 1");
    value_ = mod_floor(value, pow_int(p_, precision_));
}

PadicTower PadicTower::from_residues(const std::vector<ResidueInt>& residues) {
    if (residues.empty()) throw StructureError("empty residue sequence");
    std::int64_t p = residues.front().prime();
    for (std::size_t k = 0; k < residues.size(); ++k) {
        const ResidueInt& r = residues[k];
        if (r.prime() != p) throw StructureError("tower residues with mixed primes");
        if (r.level() != static_cast<int>(k + 1))
            throw StructureError("tower residue at position " + std::to_string(k + 1) + " has level " +
                                 std::to_string(r.level()));
        if (k + 1 < residues.size()) {
            // coherence: r_{k+2} reduces to r_{k+1}
            if (residues[k + 1].project(static_cast<int>(k + 1)) != r)
                throw StructureError("incoherent tower: level " + std::to_string(k + 2) +
                                     " does not reduce to level " + std::to_string(k + 1));
        }
    }
    return PadicTower(OddPrime(p), static_cast<int>(residues.size()), residues.back().value());
}

PadicTower PadicTower::from_digits(OddPrime p, const std::vector<int>& digits) {
    if (digits.empty()) throw StructureError("empty digit sequence");
    Int v = 0;
    Int scale = 1;
    for (int d : digits) {
        if (d < 0 || d >= p.value()) throw StructureError("digit out of range [0, p)");
        v += scale * d;
        scale *= p.value();
    }
    return PadicTower(p, static_cast<int>(digits.size()), v);
}

ResidueInt PadicTower::at(int k) const {
    if (k < 1 || k > precision_)
        throw PrecisionExceeded("tower level " + std::to_string(k) + " outside [1, " +
                                std::to_string(precision_) + "]");
    return ResidueInt(OddPrime(p_), k, value_);
}

std::vector<ResidueInt> PadicTower::residues() const {
    std::vector<ResidueInt> out;
    out.reserve(static_cast<std::size_t>(precision_));
    for (int k = 1; k <= precision_; ++k) out.push_back(at(k));
    return out;
}

std::vector<int> PadicTower::digits() const {
    return at(precision_).digits();
}

std::string PadicTower::digit_string() const {
    return at(precision_).digit_string();
}

namespace {

void require_same_tower(const PadicTower& a, const PadicTower& b) {
    if (a.prime() != b.prime() || a.precision() != b.precision())
        throw StructureError("tower (p, precision) mismatch");
}

}  // namespace

PadicTower operator+(const PadicTower& a, const PadicTower& b) {
    require_same_tower(a, b);
    return PadicTower(OddPrime(a.p_), a.precision_, a.value_ + b.value_);
}

PadicTower operator-(const PadicTower& a, const PadicTower& b) {
    require_same_tower(a, b);
    return PadicTower(OddPrime(a.p_), a.precision_, a.value_ - b.value_);
}

PadicTower operator*(const PadicTower& a, const PadicTower& b) {
    require_same_tower(a, b);
    return PadicTower(OddPrime(a.p_), a.precision_, a.value_ * b.value_);
}

int PadicTower::valuation() const {
    if (value_ == 0) throw ValuationUnknown(precision_);
    return valuation_int(OddPrime(p_), value_);
}

Rat PadicTower::abs_p() const {
    int nu = valuation();
    return Rat(1, pow_int(p_, nu));
}

bool operator==(const PadicTower& a, const PadicTower& b) {
    return a.p_ == b.p_ && a.precision_ == b.precision_ && a.value_ == b.value_;
}

int valuation_int(OddPrime p, const Int& x) {
    if (x == 0) throw StructureError("valuation of exact zero is undefined");
    Int v = x < 0 ? Int(-x) : x;
    int nu = 0;
    while (v % p.value() == 0) {
        v /= p.value();
        ++nu;
    }
    return nu;
}

Rat abs_p_int(OddPrime p, const Int& x) {
    if (x == 0) return Rat(0);
    return Rat(1, pow_int(p.value(), valuation_int(p, x)));
}

ResidueInt FormConstants::alpha(KappaLabel kappa, int level) const {
    OddPrime prime(p);
    switch (kappa) {
        case KappaLabel::MinusV:
            return ResidueInt(prime, level, -v);
        case KappaLabel::P:
            return ResidueInt(prime, level, p);
        case KappaLabel::UP:
            return ResidueInt(prime, level, p) * ResidueInt(prime, level, u).inv();
        case KappaLabel::Plus3:
            break;
    }
    throw StructureError("alpha_kappa is defined for the d=2 labels only");
}

int FormConstants::alpha_valuation(KappaLabel kappa) const {
    switch (kappa) {
        case KappaLabel::MinusV: return 0;
        case KappaLabel::P:
        case KappaLabel::UP: return 1;
        case KappaLabel::Plus3: break;
    }
    throw StructureError("alpha_kappa is defined for the d=2 labels only");
}

FormConstants find_constants(OddPrime p) {
    std::int64_t u = 0;
    for (std::int64_t candidate = 2; candidate < p.value(); ++candidate) {
        if (!is_square_mod_p(ResidueInt(p, 1, candidate))) {
            u = candidate;
            break;
        }
    }
    // Every odd prime has a non-residue among 2..p-1.
    std::int64_t v = (p.value() % 4 == 3) ? -1 : -u;
    return FormConstants{p.value(), u, v};
}

bool is_square_mod_p(const ResidueInt& a) {
    if (a.level() != 1) throw StructureError("is_square_mod_p expects a level-1 residue");
    if (a.is_zero()) return true;
    ResidueInt e = a.pow(static_cast<std::uint64_t>((a.prime() - 1) / 2));
    return e.value() == 1;
}

}  // namespace padic
