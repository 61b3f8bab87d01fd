#include "padic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <tuple>

#include "padic/haar.hpp"
#include "padic/hensel.hpp"
#include "padic/integral.hpp"
#include "padic/json_io.hpp"

namespace padic::verify {

bool CriterionReport::passed() const {
    for (const CheckResult& c : checks)
        if (c.status == Status::Fail) return false;
    return true;
}

bool CriterionReport::any_skipped() const {
    for (const CheckResult& c : checks)
        if (c.status == Status::Skipped) return true;
    return false;
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Skipped: return "skipped";
    }
    return "?";
}

namespace {

struct Ctx {
    const Options& opts;
    std::map<std::string, std::unique_ptr<GroupFamily>> families;

    GroupFamily& family(const GroupDescriptor& desc) {
        std::string key = desc.name();
        auto it = families.find(key);
        if (it == families.end())
            it = families.emplace(key, std::make_unique<GroupFamily>(desc, opts.budgets)).first;
        return *it->second;
    }

    bool p_selected(std::int64_t p) const { return !opts.only_p || *opts.only_p == p; }

    std::mt19937_64 rng(std::uint64_t salt) const { return std::mt19937_64(opts.base_seed ^ salt); }
};

const std::vector<std::int64_t> kGrid2P = {3, 5, 7, 11};
const std::vector<KappaLabel> kKappas2 = {KappaLabel::MinusV, KappaLabel::P, KappaLabel::UP};
const std::vector<std::pair<std::int64_t, std::vector<int>>> kGrid3 = {
    {3, {1, 2}}, {5, {1, 2}}, {7, {1}}};

void add(CriterionReport& r, std::string name, std::string claim, std::string computed,
         std::string expected, bool ok) {
    r.checks.push_back(CheckResult{std::move(name), std::move(claim), std::move(computed),
                                   std::move(expected), ok ? Status::Pass : Status::Fail});
}

void add_skip(CriterionReport& r, std::string name, std::string claim, std::string why) {
    r.checks.push_back(
        CheckResult{std::move(name), std::move(claim), std::move(why), "", Status::Skipped});
}

std::string cell(const GroupDescriptor& desc, int n) {
    return desc.name() + " n=" + std::to_string(n);
}

// ---------------------------------------------------------------- criterion 1

CriterionReport criterion_orders(Ctx& ctx) {
    CriterionReport r{1, "group orders match the closed forms", "orders", {}};
    bool first_cell = true;
    auto run_cell = [&](const GroupDescriptor& desc, int n) {
        Int expected = order_formula(desc, n);
        if (ctx.opts.tamper && first_cell) expected += 1;  // negative control
        first_cell = false;
        std::string claim = desc.d == 2
                                ? (desc.kappa == KappaLabel::MinusV ? "order == p^(n-1)*(p+1)"
                                                                    : "order == 2*p^n")
                                : "order == 2*p^(3n-1)*(p+1)";
        try {
            const GroupTable& t = ctx.family(desc).table(n);
            add(r, cell(desc, n), claim, std::to_string(t.size()), expected.str(),
                Int(t.size()) == expected);
        } catch (const CapacityExceeded& e) {
            add_skip(r, cell(desc, n), claim, e.what());
        }
    };
    for (std::int64_t p : kGrid2P) {
        if (!ctx.p_selected(p)) continue;
        for (KappaLabel kappa : kKappas2)
            for (int n = 1; n <= 3; ++n) run_cell(descriptor_2d(kappa, OddPrime(p)), n);
    }
    for (const auto& [p, levels] : kGrid3) {
        if (!ctx.p_selected(p)) continue;
        for (int n : levels) run_cell(descriptor_3d(OddPrime(p)), n);
    }
    return r;
}

// ---------------------------------------------------------------- criterion 2

CriterionReport criterion_oracle(Ctx& ctx) {
    CriterionReport r{2, "parametrized enumeration equals the brute-force solution set", "oracle", {}};
    const Int hard_cap = 100000000;  // candidate spaces above this stay out of the grid
    auto run_cell = [&](const GroupDescriptor& desc, int n) {
        std::string claim = "enumerated table == solutions of the defining congruences, elementwise";
        Int candidates = 1;
        Int pn = pow_int(desc.p, n);
        for (int i = 0; i < desc.d * desc.d; ++i) candidates *= pn;
        if (candidates > ctx.opts.budgets.max_candidates) {
            add_skip(r, cell(desc, n), claim,
                     "candidate space " + candidates.str() + " over budget");
            return;
        }
        const GroupTable& param = ctx.family(desc).table(n);
        GroupTable brute = brute_force_Gtilde(desc, n, ctx.opts.budgets);
        bool equal = param.size() == brute.size();
        if (equal)
            for (std::uint32_t i = 0; i < param.size(); ++i)
                if (!(param.at(i) == brute.at(i))) {
                    equal = false;
                    break;
                }
        add(r, cell(desc, n), claim,
            "brute " + std::to_string(brute.size()) + ", parametrized " + std::to_string(param.size()) +
                (equal ? ", elementwise equal" : ", MISMATCH"),
            "equal sets", equal);
    };
    for (std::int64_t p : kGrid2P) {
        if (!ctx.p_selected(p)) continue;
        for (int n = 1; n <= 4; ++n) {
            Int candidates = pow_int(p, 4 * n);
            if (candidates > hard_cap) break;
            for (KappaLabel kappa : kKappas2) run_cell(descriptor_2d(kappa, OddPrime(p)), n);
        }
    }
    for (std::int64_t p : {3, 5, 7}) {
        if (!ctx.p_selected(p)) continue;
        run_cell(descriptor_3d(OddPrime(p)), 1);
    }
    return r;
}

// ---------------------------------------------------------------- criterion 3

CriterionReport criterion_hensel(Ctx& ctx) {
    CriterionReport r{3, "every element lifts to exactly p (resp. p^3) solutions equal to its fiber",
                      "hensel", {}};
    auto run_cell = [&](const GroupDescriptor& desc, int n) {
        std::string claim = desc.d == 2 ? "#lifts == p and lifts == projection fiber"
                                        : "#lifts == p^3 and lifts == projection fiber";
        GroupFamily& family = ctx.family(desc);
        const GroupTable& coarse = family.table(n);
        const GroupTable& fine = family.table(n + 1);
        const FiberMap& fibers = family.fibers(n, n + 1);
        std::size_t expected_count = desc.d == 2 ? static_cast<std::size_t>(desc.p)
                                                 : static_cast<std::size_t>(desc.p) * desc.p * desc.p;
        bool ok = true;
        std::string detail;
        for (std::uint32_t i = 0; i < coarse.size() && ok; ++i) {
            std::vector<ResidueMatrix> lifts = lift_once(coarse.at(i), desc.kappa);
            if (lifts.size() != expected_count) {
                ok = false;
                detail = "lift count " + std::to_string(lifts.size()) + " at ordinal " +
                         std::to_string(i);
                break;
            }
            std::vector<std::string> lift_enc;
            lift_enc.reserve(lifts.size());
            for (const ResidueMatrix& m : lifts) lift_enc.push_back(m.encode());
            std::sort(lift_enc.begin(), lift_enc.end());
            std::vector<std::string> fiber_enc;
            for (std::uint32_t f : fibers.fibers[i]) fiber_enc.push_back(fine.at(f).encode());
            std::sort(fiber_enc.begin(), fiber_enc.end());
            if (lift_enc != fiber_enc) {
                ok = false;
                detail = "lift set != fiber at ordinal " + std::to_string(i);
            }
        }
        add(r, cell(desc, n), claim,
            ok ? (std::to_string(coarse.size()) + " elements verified") : detail,
            std::to_string(coarse.size()) + " elements with " + std::to_string(expected_count) +
                " lifts each",
            ok);
    };
    for (std::int64_t p : kGrid2P) {
        if (!ctx.p_selected(p)) continue;
        for (KappaLabel kappa : kKappas2)
            for (int n = 1; n <= 2; ++n) run_cell(descriptor_2d(kappa, OddPrime(p)), n);
    }
    for (std::int64_t p : {3, 5}) {
        if (!ctx.p_selected(p)) continue;
        run_cell(descriptor_3d(OddPrime(p)), 1);
    }
    return r;
}

// ---------------------------------------------------------------- criterion 4

CriterionReport criterion_cardano(Ctx& ctx) {
    CriterionReport r{4, "every d=3 element has exactly two Cardano triples, swapped by the partner map",
                      "cardano", {}};
    for (std::int64_t p : {3, 5}) {
        if (!ctx.p_selected(p)) continue;
        for (int n = 1; n <= 2; ++n) {
            std::string name = "SO3(p=" + std::to_string(p) + ") n=" + std::to_string(n);
            std::string claim = "multiplicity == 2 and partner(t1) == t2, partner(t2) == t1";
            CardanoScan scan = cardano_scan(OddPrime(p), n, ctx.opts.budgets);
            bool ok = true;
            std::string detail;
            for (std::uint32_t i = 0; i < scan.table->size() && ok; ++i) {
                const auto& ts = scan.triples[i];
                if (ts.size() != 2) {
                    ok = false;
                    detail = "multiplicity " + std::to_string(ts.size());
                    break;
                }
                CardanoTriple p0 = cardano_partner(ts[0]);
                CardanoTriple p1 = cardano_partner(ts[1]);
                if (!(p0 == ts[1]) || !(p1 == ts[0])) {
                    ok = false;
                    detail = "partner does not swap the two triples at ordinal " + std::to_string(i);
                    break;
                }
                if (!(cardano_compose(ts[0]) == scan.table->at(i)) ||
                    !(cardano_compose(ts[1]) == scan.table->at(i))) {
                    ok = false;
                    detail = "triple does not compose to its element";
                }
            }
            add(r, name, claim,
                ok ? std::to_string(scan.table->size()) + " elements, 2 triples each" : detail,
                "exactly two decompositions per element", ok);
        }
    }
    return r;
}

// ---------------------------------------------------------------- criterion 5

CriterionReport criterion_ball(Ctx& ctx) {
    CriterionReport r{5, "ball measures equal the closed forms at random centers", "ball", {}};
    auto closed_form = [](const GroupDescriptor& desc, int n) -> Rat {
        if (desc.d == 2) {
            if (desc.kappa == KappaLabel::MinusV)
                return Rat(Int(desc.p), pow_int(desc.p, n) * (desc.p + 1));  // p^(1-n)/(p+1)
            return Rat(Int(1), 2 * pow_int(desc.p, n));                     // p^-n/2
        }
        return Rat(Int(desc.p), 2 * pow_int(desc.p, 3 * n) * (desc.p + 1));  // p^(1-3n)/(2(p+1))
    };
    std::uint64_t salt = 0;
    auto run_cell = [&](const GroupDescriptor& desc, int n) {
        std::string claim = desc.d == 2 ? (desc.kappa == KappaLabel::MinusV
                                               ? "mu(ball) == p^(1-n)/(p+1)"
                                               : "mu(ball) == p^(-n)/2")
                                        : "mu(ball) == p^(1-3n)/(2(p+1))";
        GroupFamily& family = ctx.family(desc);
        Rat expected = closed_form(desc, n);
        auto rng = ctx.rng(0x5ba11 + salt++);
        bool ok = true;
        for (int trial = 0; trial < 20 && ok; ++trial) {
            ResidueMatrix center = sample_haar(family, n, rng);
            ok = ball(family, center, n).measure() == expected;
        }
        add(r, cell(desc, n), claim, ok ? rational_string(expected) : "mismatch",
            rational_string(expected), ok);
    };
    for (std::int64_t p : kGrid2P) {
        if (!ctx.p_selected(p)) continue;
        for (KappaLabel kappa : kKappas2)
            for (int n = 1; n <= 3; ++n) run_cell(descriptor_2d(kappa, OddPrime(p)), n);
    }
    for (const auto& [p, levels] : kGrid3) {
        if (!ctx.p_selected(p)) continue;
        for (int n : levels) run_cell(descriptor_3d(OddPrime(p)), n);
    }
    return r;
}

// ---------------------------------------------------------------- criterion 6

CylinderSet random_subset(GroupFamily& family, int level, std::mt19937_64& rng) {
    const GroupTable& t = family.table(level);
    std::vector<std::uint32_t> members;
    for (std::uint32_t i = 0; i < t.size(); ++i)
        if (rng() & 1) members.push_back(i);
    return CylinderSet(family, level, std::move(members));
}

CriterionReport criterion_invariance(Ctx& ctx) {
    CriterionReport r{6, "translation invariance, refinement consistency and measure axioms",
                      "invariance", {}};

    // Exhaustive at d=2, p=3, n=1: all (subset, translator, side) triples.
    if (ctx.p_selected(3)) {
        for (KappaLabel kappa : kKappas2) {
            GroupDescriptor desc = descriptor_2d(kappa, OddPrime(3));
            GroupFamily& family = ctx.family(desc);
            const GroupTable& t = family.table(1);
            bool ok = true;
            std::uint64_t cases = 0;
            for (std::uint64_t mask = 0; mask < (1ULL << t.size()) && ok; ++mask) {
                std::vector<std::uint32_t> members;
                for (std::uint32_t i = 0; i < t.size(); ++i)
                    if (mask & (1ULL << i)) members.push_back(i);
                CylinderSet e(family, 1, members);
                Rat mu = e.measure();
                if (e.complement().measure() + mu != 1) {
                    ok = false;
                    break;
                }
                for (std::uint32_t g = 0; g < t.size() && ok; ++g) {
                    for (Side side : {Side::Left, Side::Right}) {
                        ++cases;
                        if (e.translate(t.at(g), side).measure() != mu) {
                            ok = false;
                            break;
                        }
                    }
                }
            }
            add(r, desc.name() + " n=1 exhaustive", "mu(RE) == mu(ER) == mu(E); mu(E)+mu(E^c) == 1",
                std::to_string(cases) + " (set, translator, side) cases", "all invariant", ok);

            // sigma-additivity over all disjoint pairs at level 1
            bool additive = true;
            for (std::uint64_t m1 = 0; m1 < (1ULL << t.size()) && additive; ++m1) {
                for (std::uint64_t m2 = 0; m2 < (1ULL << t.size()) && additive; ++m2) {
                    if (m1 & m2) continue;
                    std::vector<std::uint32_t> a, b;
                    for (std::uint32_t i = 0; i < t.size(); ++i) {
                        if (m1 & (1ULL << i)) a.push_back(i);
                        if (m2 & (1ULL << i)) b.push_back(i);
                    }
                    CylinderSet ea(family, 1, a), eb(family, 1, b);
                    additive = ea.unite(eb).measure() == ea.measure() + eb.measure();
                }
            }
            add(r, desc.name() + " n=1 additivity", "mu(E u F) == mu(E) + mu(F) for disjoint E, F",
                "all disjoint pairs", "additive", additive);
        }
    }

    // Randomized elsewhere.
    std::vector<std::pair<GroupDescriptor, int>> random_grid;
    if (ctx.p_selected(5))
        for (KappaLabel kappa : kKappas2)
            random_grid.push_back({descriptor_2d(kappa, OddPrime(5)), 2});
    if (ctx.p_selected(3)) random_grid.push_back({descriptor_3d(OddPrime(3)), 2});
    std::uint64_t salt = 0;
    for (const auto& [desc, n] : random_grid) {
        GroupFamily& family = ctx.family(desc);
        const GroupTable& t = family.table(n);
        auto rng = ctx.rng(0x1374 + salt++);
        bool ok = true;
        for (int trial = 0; trial < 1000 && ok; ++trial) {
            CylinderSet e = random_subset(family, n, rng);
            std::uint32_t g = static_cast<std::uint32_t>(uniform_below(rng, t.size()));
            Side side = (rng() & 1) ? Side::Left : Side::Right;
            ok = e.translate(t.at(g), side).measure() == e.measure();
        }
        add(r, cell(desc, n) + " randomized", "mu(RE) == mu(ER) == mu(E)", "1000 trials",
            "all invariant", ok);
    }

    // Refinement preserves measure.
    std::vector<std::tuple<GroupDescriptor, int, int>> refine_grid;
    if (ctx.p_selected(3)) {
        for (KappaLabel kappa : kKappas2)
            refine_grid.push_back({descriptor_2d(kappa, OddPrime(3)), 1, 3});
        refine_grid.push_back({descriptor_3d(OddPrime(3)), 1, 2});
    }
    for (const auto& [desc, lo, hi] : refine_grid) {
        GroupFamily& family = ctx.family(desc);
        auto rng = ctx.rng(0xef1e + salt++);
        bool ok = true;
        for (int trial = 0; trial < 100 && ok; ++trial) {
            int level = lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo)));
            CylinderSet e = random_subset(family, level, rng);
            ok = e.refine(hi).measure() == e.measure();
        }
        add(r, desc.name() + " refine " + std::to_string(lo) + ".." + std::to_string(hi),
            "measure(refine(E)) == measure(E)", "100 random cylinder sets", "measure preserved", ok);
    }

    // Normalization at every grid point.
    bool norm_ok = true;
    int norm_cells = 0;
    auto check_full = [&](const GroupDescriptor& desc, int n) {
        GroupFamily& family = ctx.family(desc);
        if (CylinderSet::full(family, n).measure() != 1) norm_ok = false;
        ++norm_cells;
    };
    for (std::int64_t p : kGrid2P) {
        if (!ctx.p_selected(p)) continue;
        for (KappaLabel kappa : kKappas2)
            for (int n = 1; n <= 3; ++n) check_full(descriptor_2d(kappa, OddPrime(p)), n);
    }
    for (const auto& [p, levels] : kGrid3) {
        if (!ctx.p_selected(p)) continue;
        for (int n : levels) check_full(descriptor_3d(OddPrime(p)), n);
    }
    add(r, "normalization", "mu(G) == 1 at every level", std::to_string(norm_cells) + " cells",
        "all equal to 1", norm_ok);
    return r;
}

// ---------------------------------------------------------------- criterion 7

CriterionReport criterion_integral(Ctx& ctx) {
    CriterionReport r{7, "the integral Haar measure coincides with the counting pipeline", "integral", {}};
    for (std::int64_t p : {3, 5, 7}) {
        if (!ctx.p_selected(p)) continue;
        OddPrime prime(p);
        for (KappaLabel kappa : kKappas2) {
            std::string base = "SO2(kappa=" + kappa_name(kappa) + ",p=" + std::to_string(p) + ")";

            bool disc_ok = true;
            for (int k = 0; k >= -3; --k)
                disc_ok = disc_ok && disc_density_integral(kappa, prime, k) == Rat(1, pow_int(p, -k));
            add(r, base + " disc integrals", "integral over D_k(0) of the density == p^k",
                "k in {0,-1,-2,-3}", "exact", disc_ok);

            bool circle_ok = true;
            for (int m = 0; m >= -2; --m)
                circle_ok = circle_ok &&
                            circle_volume(prime, m, -m + 2) ==
                                Rat(Int(p - 1), pow_int(p, -m) * p);
            add(r, base + " circle volumes", "vol(S_m(0)) == p^m (1 - 1/p)", "m in {0,-1,-2}",
                "exact", circle_ok);

            Rat norm = normalization(kappa, prime);
            Rat norm_expected = (kappa == KappaLabel::MinusV) ? Rat(Int(p + 1), Int(p)) : Rat(2);
            add(r, base + " normalization", "two-chart mass == (1 + 1/p) or 2",
                rational_string(norm), rational_string(norm_expected), norm == norm_expected);

            GroupFamily& family = ctx.family(descriptor_2d(kappa, prime));
            for (int n = 1; n <= 3; ++n) {
                bool cbi = coordinate_ball_image(kappa, prime, n);
                add(r, base + " coordinate image n=" + std::to_string(n),
                    "R(sigma) within p^-n of I exactly when principal and sigma == 0 mod p^n",
                    cbi ? "verified" : "counterexample", "verified", cbi);
                MeasureComparison cmp = compare_measures(kappa, prime, n, family);
                add(r, base + " coincidence n=" + std::to_string(n),
                    "disc integral / normalization == 1/|G|",
                    rational_string(cmp.integral_value) + " vs " + rational_string(cmp.counting_value),
                    "equal", cmp.equal);
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------- criterion 8

CriterionReport criterion_sampler(Ctx& ctx) {
    CriterionReport r{8, "sampler projections are uniform; statistical smoke test", "sampler", {}};

    // Structural: fibers between consecutive levels all share one size.
    bool fibers_ok = true;
    int fiber_cells = 0;
    auto check_fibers = [&](const GroupDescriptor& desc, int n) {
        GroupFamily& family = ctx.family(desc);
        const FiberMap& map = family.fibers(n, n + 1);
        Int expected = order_formula(desc, n + 1) / order_formula(desc, n);
        for (const auto& fiber : map.fibers)
            if (Int(fiber.size()) != expected) fibers_ok = false;
        ++fiber_cells;
    };
    for (std::int64_t p : kGrid2P) {
        if (!ctx.p_selected(p)) continue;
        for (KappaLabel kappa : kKappas2)
            for (int n = 1; n <= 2; ++n) check_fibers(descriptor_2d(kappa, OddPrime(p)), n);
    }
    for (std::int64_t p : {3, 5}) {
        if (!ctx.p_selected(p)) continue;
        check_fibers(descriptor_3d(OddPrime(p)), 1);
    }
    add(r, "fiber uniformity", "every projection fiber has size |G_l| / |G_n|",
        std::to_string(fiber_cells) + " cells", "uniform fibers", fibers_ok);

    // Statistical: 10^5 level-1 draws at (d=2, kappa=-v, p=3); 3-sigma bound.
    if (ctx.p_selected(3)) {
        GroupFamily& family = ctx.family(descriptor_2d(KappaLabel::MinusV, OddPrime(3)));
        const GroupTable& t = family.table(1);
        std::vector<std::uint64_t> counts(t.size(), 0);
        auto rng = ctx.rng(0x5a371e);
        for (std::uint64_t i = 0; i < ctx.opts.sample_draws; ++i)
            ++counts[t.index_of(sample_haar(family, 1, rng))];
        double expected = static_cast<double>(ctx.opts.sample_draws) / static_cast<double>(t.size());
        double q = 1.0 / static_cast<double>(t.size());
        double sigma = std::sqrt(static_cast<double>(ctx.opts.sample_draws) * q * (1.0 - q));
        bool ok = true;
        std::string observed;
        for (std::uint64_t c : counts) {
            observed += (observed.empty() ? "" : ",") + std::to_string(c);
            if (std::abs(static_cast<double>(c) - expected) > 3.0 * sigma) ok = false;
        }
        add(r, "frequency test", "each of 4 elements within 3 sigma of draws/4", observed,
            std::to_string(static_cast<std::uint64_t>(expected)) + " +/- " +
                std::to_string(static_cast<std::uint64_t>(3.0 * sigma)),
            ok);
    }
    return r;
}

}  // namespace

CriterionReport run_criterion(int number, const Options& opts) {
    Ctx ctx{opts, {}};
    switch (number) {
        case 1: return criterion_orders(ctx);
        case 2: return criterion_oracle(ctx);
        case 3: return criterion_hensel(ctx);
        case 4: return criterion_cardano(ctx);
        case 5: return criterion_ball(ctx);
        case 6: return criterion_invariance(ctx);
        case 7: return criterion_integral(ctx);
        case 8: return criterion_sampler(ctx);
        default: throw StructureError("criteria are numbered 1..8");
    }
}

std::vector<CriterionReport> run_all(const Options& opts) {
    Ctx ctx{opts, {}};
    std::vector<CriterionReport> out;
    auto want = [&](const std::string& keyword) {
        if (opts.only_checks.empty()) return true;
        for (const std::string& k : opts.only_checks)
            if (k == keyword) return true;
        return false;
    };
    static const std::pair<const char*, CriterionReport (*)(Ctx&)> criteria[] = {
        {"orders", criterion_orders},       {"oracle", criterion_oracle},
        {"hensel", criterion_hensel},       {"cardano", criterion_cardano},
        {"ball", criterion_ball},           {"invariance", criterion_invariance},
        {"integral", criterion_integral},   {"sampler", criterion_sampler}};
    for (const auto& [keyword, fn] : criteria) {
        if (!want(keyword)) continue;
        out.push_back(fn(ctx));
    }
    return out;
}

}  // namespace padic::verify
