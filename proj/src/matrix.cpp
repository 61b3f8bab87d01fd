#include "padic/matrix.hpp"

namespace padic {

ResidueMatrix::ResidueMatrix(OddPrime p, int level, int d)
    : p_(p.value()), level_(level), d_(d), e_(static_cast<std::size_t>(d * d), Int(0)) {
    if (level < 1) throw StructureError("matrix level must be >= 1");
    if (d != 2 && d != 3) throw StructureError("only 2x2 and 3x3 matrices are supported");
}

ResidueMatrix::ResidueMatrix(OddPrime p, int level, int d, std::vector<Int> entries)
    : p_(p.value()), level_(level), d_(d), e_(std::move(entries)) {
    if (level < 1) throw StructureError("matrix level must be >= 1");
    if (d != 2 && d != 3) throw StructureError("only 2x2 and 3x3 matrices are supported");
    if (e_.size() != static_cast<std::size_t>(d * d)) throw StructureError("entry count != d*d");
    reduce();
}

void ResidueMatrix::reduce() {
    Int m = modulus();
    for (Int& x : e_) x = mod_floor(x, m);
}

ResidueMatrix ResidueMatrix::identity(OddPrime p, int level, int d) {
    ResidueMatrix m(p, level, d);
    for (int i = 0; i < d; ++i) m.set(i, i, 1);
    return m;
}

void ResidueMatrix::set(int i, int j, const Int& value) {
    e_[static_cast<std::size_t>(i * d_ + j)] = mod_floor(value, modulus());
}

ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b) {
    if (a.p_ != b.p_ || a.level_ != b.level_ || a.d_ != b.d_)
        throw StructureError("matrix (p, level, d) mismatch in product");
    ResidueMatrix out(OddPrime(a.p_), a.level_, a.d_);
    Int m = a.modulus();
    for (int i = 0; i < a.d_; ++i) {
        for (int j = 0; j < a.d_; ++j) {
            Int acc = 0;
            for (int k = 0; k < a.d_; ++k) acc += a.at(i, k) * b.at(k, j);
            out.e_[static_cast<std::size_t>(i * a.d_ + j)] = mod_floor(acc, m);
        }
    }
    return out;
}

ResidueMatrix ResidueMatrix::operator-() const {
    ResidueMatrix out(OddPrime(p_), level_, d_);
    Int m = modulus();
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = mod_floor(-e_[i], m);
    return out;
}

Int ResidueMatrix::det() const {
    Int m = modulus();
    if (d_ == 2) {
        return mod_floor(at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0), m);
    }
    Int acc = at(0, 0) * at(1, 1) * at(2, 2) + at(0, 1) * at(1, 2) * at(2, 0) +
              at(0, 2) * at(1, 0) * at(2, 1) - at(0, 0) * at(1, 2) * at(2, 1) -
              at(0, 1) * at(1, 0) * at(2, 2) - at(0, 2) * at(1, 1) * at(2, 0);
    return mod_floor(acc, m);
}

ResidueMatrix ResidueMatrix::inverse_unimodular() const {
    if (det() != 1) throw StructureError("inverse_unimodular requires det == 1 mod p^n");
    ResidueMatrix out(OddPrime(p_), level_, d_);
    if (d_ == 2) {
        out.set(0, 0, at(1, 1));
        out.set(0, 1, -at(0, 1));
        out.set(1, 0, -at(1, 0));
        out.set(1, 1, at(0, 0));
        return out;
    }
    // Adjugate: transpose of cofactors. det == 1 makes it the inverse.
    auto cof = [&](int i, int j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
        int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        return at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.set(j, i, cof(i, j));
    return out;
}

ResidueMatrix ResidueMatrix::project(int target_level) const {
    if (target_level > level_)
        throw PrecisionExceeded("cannot project matrix to a finer level");
    ResidueMatrix out(OddPrime(p_), target_level, d_);
    Int m = pow_int(p_, target_level);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = mod_floor(e_[i], m);
    return out;
}

std::string ResidueMatrix::encode() const {
    std::string s;
    bool first = true;
    for (const Int& x : e_) {
        Int v = x;
        if (p_ <= 36) {
            for (int k = 0; k < level_; ++k) {
                s += digit_char(static_cast<int>(v % p_));
                v /= p_;
            }
        } else {
            for (int k = 0; k < level_; ++k) {
                if (!first || k > 0) s += '.';
                s += Int(v % p_).str();
                v /= p_;
            }
        }
        first = false;
    }
    return s;
}

ResidueMatrix ResidueMatrix::decode(OddPrime p, int level, int d, const std::string& digits) {
    std::vector<Int> entries(static_cast<std::size_t>(d * d), Int(0));
    if (p.value() <= 36) {
        if (digits.size() != static_cast<std::size_t>(d * d * level))
            throw StructureError("encoded matrix has wrong length (expected " +
                                 std::to_string(d * d * level) + " digits)");
        std::size_t pos = 0;
        for (auto& entry : entries) {
            Int scale = 1;
            for (int k = 0; k < level; ++k) {
                int dv = digit_value(digits[pos++]);
                if (dv >= p.value()) throw StructureError("digit >= p in encoding");
                entry += scale * dv;
                scale *= p.value();
            }
        }
    } else {
        std::vector<std::string> parts;
        std::string cur;
        for (char c : digits) {
            if (c == '.') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        parts.push_back(cur);
        if (parts.size() != static_cast<std::size_t>(d * d * level))
            throw StructureError("encoded matrix has wrong digit count");
        std::size_t pos = 0;
        for (auto& entry : entries) {
            Int scale = 1;
            for (int k = 0; k < level; ++k) {
                Int dv(parts[pos++]);
                if (dv < 0 || dv >= p.value()) throw StructureError("digit >= p in encoding");
                entry += scale * dv;
                scale *= p.value();
            }
        }
    }
    return ResidueMatrix(p, level, d, std::move(entries));
}

bool operator==(const ResidueMatrix& a, const ResidueMatrix& b) {
    return a.p_ == b.p_ && a.level_ == b.level_ && a.d_ == b.d_ && a.e_ == b.e_;
}

}  // namespace padic
