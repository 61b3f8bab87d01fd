#include "padic/groups.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <thread>

namespace padic {

std::string GroupDescriptor::name() const {
    if (d == 3) return "SO3(p=" + std::to_string(p) + ")";
    return "SO2(kappa=" + kappa_name(kappa) + ",p=" + std::to_string(p) + ")";
}

DiagonalForm GroupDescriptor::form() const {
    return form_matrix(kappa, OddPrime(p));
}

GroupDescriptor descriptor_2d(KappaLabel kappa, OddPrime p) {
    if (dimension_of(kappa) != 2) throw StructureError("descriptor_2d needs a d=2 label");
    return GroupDescriptor{2, kappa, p.value()};
}

GroupDescriptor descriptor_3d(OddPrime p) {
    return GroupDescriptor{3, KappaLabel::Plus3, p.value()};
}

Budgets Budgets::from_env() {
    Budgets b;
    if (const char* s = std::getenv("PADICROT_MAX_TABLE")) b.max_table = std::strtoull(s, nullptr, 10);
    if (const char* s = std::getenv("PADICROT_MAX_CANDIDATES"))
        b.max_candidates = std::strtoull(s, nullptr, 10);
    return b;
}

Int order_formula(const GroupDescriptor& desc, int level) {
    if (level < 1) throw StructureError("level must be >= 1");
    Int pn = pow_int(desc.p, level);
    if (desc.d == 2) {
        if (desc.kappa == KappaLabel::MinusV) return pow_int(desc.p, level - 1) * (desc.p + 1);
        return 2 * pn;
    }
    return 2 * pow_int(desc.p, 3 * level - 1) * (desc.p + 1);
}

GroupTable::GroupTable(GroupDescriptor desc, int level, std::vector<ResidueMatrix> elements)
    : desc_(desc), level_(level) {
    std::vector<std::pair<std::string, ResidueMatrix>> keyed;
    keyed.reserve(elements.size());
    for (ResidueMatrix& m : elements) {
        if (m.prime() != desc_.p || m.dim() != desc_.d || m.level() != level_)
            throw StructureError("table element with wrong (p, level, d)");
        keyed.emplace_back(m.encode(), std::move(m));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    elements_.reserve(keyed.size());
    index_.reserve(keyed.size());
    for (auto& [enc, m] : keyed) {
        if (!index_.emplace(enc, static_cast<std::uint32_t>(elements_.size())).second)
            throw StructureError("duplicate element in group table: " + enc);
        elements_.push_back(std::move(m));
    }
    auto id = find(ResidueMatrix::identity(OddPrime(desc_.p), level_, desc_.d));
    if (!id) throw StructureError("group table lacks the identity");
    identity_ = *id;
}

std::optional<std::uint32_t> GroupTable::find(const ResidueMatrix& m) const {
    auto it = index_.find(m.encode());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::uint32_t GroupTable::index_of(const ResidueMatrix& m) const {
    auto i = find(m);
    if (!i) throw NotAGroupElement("matrix " + m.encode() + " is not in " + desc_.name() +
                                   " at level " + std::to_string(level_));
    return *i;
}

std::uint32_t GroupTable::mul(std::uint32_t a, std::uint32_t b) const {
    ResidueMatrix m = elements_[a] * elements_[b];
    auto i = find(m);
    if (!i) throw ClosureViolation("product escaped the table: " + m.encode());
    return *i;
}

std::uint32_t GroupTable::inv(std::uint32_t a) const {
    ResidueMatrix m = elements_[a].inverse_unimodular();
    auto i = find(m);
    if (!i) throw ClosureViolation("inverse escaped the table: " + m.encode());
    return *i;
}

GroupTable enumerate_G2(KappaLabel kappa, OddPrime p, int level, const Budgets& budgets) {
    if (dimension_of(kappa) != 2) throw StructureError("enumerate_G2 needs a d=2 label");
    GroupDescriptor desc = descriptor_2d(kappa, p);
    Int order = order_formula(desc, level);
    if (order > budgets.max_table)
        throw CapacityExceeded("group table over budget", order.convert_to<unsigned long long>(),
                               budgets.max_table);

    std::uint64_t pn = pow_int(p.value(), level).convert_to<std::uint64_t>();
    std::vector<ResidueMatrix> elems;
    elems.reserve(order.convert_to<std::size_t>());
    for (std::uint64_t s = 0; s < pn; ++s)
        elems.push_back(rot2(kappa, BranchedParam{ResidueInt(p, level, s), Branch::Principal}));
    if (kappa == KappaLabel::MinusV) {
        std::uint64_t pn1 = pn / static_cast<std::uint64_t>(p.value());
        for (std::uint64_t s = 0; s < pn1; ++s)
            elems.push_back(rot2(kappa, BranchedParam{ResidueInt(p, level, Int(s) * p.value()),
                                                      Branch::Flipped}));
    } else {
        for (std::uint64_t s = 0; s < pn; ++s)
            elems.push_back(rot2(kappa, BranchedParam{ResidueInt(p, level, s), Branch::Flipped}));
    }

    GroupTable table(desc, level, std::move(elems));
    if (Int(table.size()) != order)
        throw StructureError("enumerated order " + std::to_string(table.size()) +
                             " differs from closed form " + order.str());
    return table;
}

namespace {

std::vector<BranchedParam> axis_params(OddPrime p, int level, bool z_axis) {
    std::uint64_t pn = pow_int(p.value(), level).convert_to<std::uint64_t>();
    std::vector<BranchedParam> out;
    for (std::uint64_t s = 0; s < pn; ++s)
        out.push_back(BranchedParam{ResidueInt(p, level, s), Branch::Principal});
    if (z_axis) {
        std::uint64_t pn1 = pn / static_cast<std::uint64_t>(p.value());
        for (std::uint64_t s = 0; s < pn1; ++s)
            out.push_back(BranchedParam{ResidueInt(p, level, Int(s) * p.value()), Branch::Flipped});
    } else {
        for (std::uint64_t s = 0; s < pn; ++s)
            out.push_back(BranchedParam{ResidueInt(p, level, s), Branch::Flipped});
    }
    return out;
}

CardanoScan cardano_scan_impl(OddPrime p, int level, const Budgets& budgets, bool keep_triples) {
    GroupDescriptor desc = descriptor_3d(p);
    Int order = order_formula(desc, level);
    if (order > budgets.max_table)
        throw CapacityExceeded("group table over budget", order.convert_to<unsigned long long>(),
                               budgets.max_table);

    std::vector<BranchedParam> xs = axis_params(p, level, false);
    std::vector<BranchedParam> ys = axis_params(p, level, false);
    std::vector<BranchedParam> zs = axis_params(p, level, true);

    std::vector<ResidueMatrix> mx, my, mz;
    for (const auto& a : xs) mx.push_back(rot3_axis(Axis::X, a));
    for (const auto& a : ys) my.push_back(rot3_axis(Axis::Y, a));
    for (const auto& a : zs) mz.push_back(rot3_axis(Axis::Z, a));

    std::unordered_map<std::string, std::uint32_t> seen;
    std::vector<ResidueMatrix> elems;
    std::vector<std::uint32_t> multiplicity;
    std::vector<std::vector<CardanoTriple>> triples;
    seen.reserve(order.convert_to<std::size_t>() * 2);

    for (std::size_t ix = 0; ix < xs.size(); ++ix) {
        for (std::size_t iy = 0; iy < ys.size(); ++iy) {
            ResidueMatrix xy = mx[ix] * my[iy];
            for (std::size_t iz = 0; iz < zs.size(); ++iz) {
                ResidueMatrix m = xy * mz[iz];
                auto [it, inserted] = seen.try_emplace(m.encode(),
                                                       static_cast<std::uint32_t>(elems.size()));
                if (inserted) {
                    elems.push_back(m);
                    multiplicity.push_back(0);
                    if (keep_triples) triples.emplace_back();
                }
                ++multiplicity[it->second];
                if (keep_triples)
                    triples[it->second].push_back(CardanoTriple{xs[ix], ys[iy], zs[iz]});
            }
        }
    }

    for (std::uint32_t c : multiplicity)
        if (c != 2)
            throw StructureError("Cardano multiplicity " + std::to_string(c) +
                                 " != 2 during d=3 enumeration");
    if (Int(elems.size()) != order)
        throw StructureError("enumerated d=3 order " + std::to_string(elems.size()) +
                             " differs from closed form " + order.str());

    auto table = std::make_shared<GroupTable>(desc, level, elems);
    CardanoScan scan;
    scan.table = table;
    if (keep_triples) {
        scan.triples.resize(elems.size());
        for (std::size_t i = 0; i < elems.size(); ++i)
            scan.triples[table->index_of(elems[i])] = std::move(triples[i]);
    }
    return scan;
}

}  // namespace

GroupTable enumerate_G3(OddPrime p, int level, const Budgets& budgets) {
    CardanoScan scan = cardano_scan_impl(p, level, budgets, false);
    return std::move(*std::const_pointer_cast<GroupTable>(scan.table));
}

CardanoScan cardano_scan(OddPrime p, int level, const Budgets& budgets) {
    return cardano_scan_impl(p, level, budgets, true);
}

namespace {

// Fast modular scan state. Everything fits in 64 bits: the candidate budget
// caps the modulus M = p^n at budget^(1/d^2) <= 2^16, and every intermediate
// value here is at most 3 * M^2 < 2^34.
struct BruteScan {
    std::uint64_t M;
    int d;
    std::array<std::uint64_t, 3> a;  // form entries mod M

    std::uint64_t norm(const std::uint64_t* col) const {
        std::uint64_t acc = 0;
        for (int i = 0; i < d; ++i) acc += a[static_cast<std::size_t>(i)] * col[i] % M * col[i];
        return acc % M;
    }
    std::uint64_t pairing(const std::uint64_t* u, const std::uint64_t* w) const {
        std::uint64_t acc = 0;
        for (int i = 0; i < d; ++i) acc += a[static_cast<std::size_t>(i)] * u[i] % M * w[i];
        return acc % M;
    }
};

using Column = std::array<std::uint64_t, 3>;

std::vector<Column> columns_with_norm(const BruteScan& s, std::uint64_t target) {
    std::vector<Column> out;
    Column c{0, 0, 0};
    std::uint64_t total = 1;
    for (int i = 0; i < s.d; ++i) total *= s.M;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (int i = 0; i < s.d; ++i) {
            c[static_cast<std::size_t>(i)] = t % s.M;
            t /= s.M;
        }
        if (s.norm(c.data()) == target % s.M) out.push_back(c);
    }
    return out;
}

}  // namespace

GroupTable brute_force_Gtilde(const GroupDescriptor& desc, int level, const Budgets& budgets) {
    OddPrime p(desc.p);
    Int pn = pow_int(desc.p, level);
    Int candidates = 1;
    for (int i = 0; i < desc.d * desc.d; ++i) candidates *= pn;
    if (candidates > budgets.max_candidates)
        throw CapacityExceeded("brute-force candidate space over budget",
                               candidates > Int(~0ULL) ? ~0ULL
                                                       : candidates.convert_to<unsigned long long>(),
                               budgets.max_candidates);

    BruteScan scan;
    scan.M = pn.convert_to<std::uint64_t>();
    scan.d = desc.d;
    DiagonalForm q = desc.form();
    for (int i = 0; i < desc.d; ++i)
        scan.a[static_cast<std::size_t>(i)] =
            mod_floor(Int(q.entries[static_cast<std::size_t>(i)]), pn).convert_to<std::uint64_t>();

    // Second (and third) column candidates, gated by their norm condition.
    std::vector<Column> s2 = columns_with_norm(scan, scan.a[1]);
    std::vector<Column> s3;
    if (desc.d == 3) s3 = columns_with_norm(scan, scan.a[2]);

    std::uint64_t first_space = 1;
    for (int i = 0; i < desc.d; ++i) first_space *= scan.M;

    unsigned thread_count = std::max(1u, std::thread::hardware_concurrency());
    if (static_cast<std::uint64_t>(thread_count) > first_space)
        thread_count = static_cast<unsigned>(first_space);

    using Entries = std::vector<std::uint64_t>;
    std::vector<std::vector<Entries>> results(thread_count);

    auto worker = [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
        std::vector<Entries>& out = results[t];
        const std::uint64_t M = scan.M;
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            Column c1;
            std::uint64_t v = idx;
            for (int i = 0; i < scan.d; ++i) {
                c1[static_cast<std::size_t>(i)] = v % M;
                v /= M;
            }
            if (scan.norm(c1.data()) != scan.a[0] % M) continue;
            if (scan.d == 2) {
                for (const Column& c2 : s2) {
                    if (scan.pairing(c1.data(), c2.data()) != 0) continue;
                    std::uint64_t det = (c1[0] * c2[1] % M + M * M - c2[0] * c1[1] % M) % M;
                    if (det != 1 % M) continue;
                    out.push_back(Entries{c1[0], c2[0], c1[1], c2[1]});
                }
            } else {
                for (const Column& c2 : s2) {
                    if (scan.pairing(c1.data(), c2.data()) != 0) continue;
                    for (const Column& c3 : s3) {
                        if (scan.pairing(c1.data(), c3.data()) != 0) continue;
                        if (scan.pairing(c2.data(), c3.data()) != 0) continue;
                        std::uint64_t pos = c1[0] * (c2[1] * c3[2] % M) % M +
                                            c2[0] * (c3[1] * c1[2] % M) % M +
                                            c3[0] * (c1[1] * c2[2] % M) % M;
                        std::uint64_t neg = c1[0] * (c3[1] * c2[2] % M) % M +
                                            c2[0] * (c1[1] * c3[2] % M) % M +
                                            c3[0] * (c2[1] * c1[2] % M) % M;
                        if ((pos + 3 * M * M - neg) % M != 1 % M) continue;
                        out.push_back(Entries{c1[0], c2[0], c3[0], c1[1], c2[1], c3[1], c1[2],
                                              c2[2], c3[2]});
                    }
                }
            }
        }
    };

    std::vector<std::thread> threads;
    std::uint64_t chunk = (first_space + thread_count - 1) / thread_count;
    for (unsigned t = 0; t < thread_count; ++t) {
        std::uint64_t lo = t * chunk;
        std::uint64_t hi = std::min(first_space, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back(worker, t, lo, hi);
    }
    for (auto& th : threads) th.join();

    std::vector<ResidueMatrix> elems;
    for (const auto& chunk_result : results) {
        for (const Entries& e : chunk_result) {
            std::vector<Int> entries(e.begin(), e.end());
            elems.emplace_back(p, level, desc.d, std::move(entries));
        }
    }

    if (desc.d == 3 && level == 1) {
        // Post-hoc consistency of every solution with the level-1 shape
        // (a, svb, 0; b, sa, 0; c, d, s): an assertion, never a pruning.
        FormConstants fc = find_constants(p);
        std::int64_t P = desc.p;
        auto at_p = [&](const ResidueMatrix& m, int i, int j) {
            return (m.at(i, j) % P).convert_to<std::int64_t>();
        };
        for (const ResidueMatrix& m : elems) {
            std::int64_t s = at_p(m, 2, 2);
            std::int64_t a = at_p(m, 0, 0), b = at_p(m, 1, 0);
            bool ok = (s == 1 || s == P - 1) && at_p(m, 0, 2) == 0 && at_p(m, 1, 2) == 0 &&
                      at_p(m, 1, 1) == s * a % P &&
                      at_p(m, 0, 1) == mod_floor(Int(s) * fc.v * b, Int(P)).convert_to<std::int64_t>() &&
                      mod_floor(Int(a) * a - Int(fc.v) * b * b, Int(P)) == 1;
            if (!ok)
                throw StructureError("brute-force solution violates the level-1 shape: " + m.encode());
        }
    }

    return GroupTable(desc, level, std::move(elems));
}

GroupTable enumerate_table(const GroupDescriptor& desc, int level, const Budgets& budgets) {
    if (desc.d == 2) return enumerate_G2(desc.kappa, OddPrime(desc.p), level, budgets);
    return enumerate_G3(OddPrime(desc.p), level, budgets);
}

FiberMap project_group(const GroupTable& from, const GroupTable& to) {
    if (!(from.descriptor() == to.descriptor()))
        throw StructureError("projection between different descriptors");
    if (to.level() > from.level())
        throw StructureError("projection target level must be <= source level");
    FiberMap map;
    map.from_level = from.level();
    map.to_level = to.level();
    map.image.resize(from.size());
    map.fibers.resize(to.size());
    for (std::uint32_t i = 0; i < from.size(); ++i) {
        std::uint32_t j = to.index_of(from.at(i).project(to.level()));
        map.image[i] = j;
        map.fibers[j].push_back(i);
    }
    return map;
}

GroupFamily::GroupFamily(GroupDescriptor desc, Budgets budgets) : desc_(desc), budgets_(budgets) {}

const GroupTable& GroupFamily::table(int level) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tables_.find(level);
    if (it == tables_.end()) {
        auto built = std::make_shared<const GroupTable>(enumerate_table(desc_, level, budgets_));
        it = tables_.emplace(level, std::move(built)).first;
    }
    return *it->second;
}

const FiberMap& GroupFamily::fibers(int coarse_level, int fine_level) const {
    if (coarse_level > fine_level) throw StructureError("fibers(coarse, fine) needs coarse <= fine");
    const GroupTable& fine = table(fine_level);
    const GroupTable& coarse = table(coarse_level);
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(coarse_level, fine_level);
    auto it = fiber_maps_.find(key);
    if (it == fiber_maps_.end()) {
        auto built = std::make_shared<const FiberMap>(project_group(fine, coarse));
        it = fiber_maps_.emplace(key, std::move(built)).first;
    }
    return *it->second;
}

std::uint32_t GroupFamily::project_index(int from_level, std::uint32_t index, int to_level) const {
    const GroupTable& from = table(from_level);
    const GroupTable& to = table(to_level);
    return to.index_of(from.at(index).project(to_level));
}

}  // namespace padic
