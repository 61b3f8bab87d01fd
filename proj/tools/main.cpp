// Command-line surface over the p-adic rotation-group library: enumeration,
// measures, lifting, Cardano decompositions, sampling, verification.
//
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "padic/haar.hpp"
#include "padic/hensel.hpp"
#include "padic/integral.hpp"
#include "padic/json_io.hpp"
#include "padic/verify.hpp"

using namespace padic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOpts {
    Budgets budgets = Budgets::from_env();
    std::string format = "pretty";  // json, csv, pretty
    std::string out_path;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream f(g.out_path);
        if (!f) throw StructureError("cannot open output file " + g.out_path);
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
    }
}

GroupDescriptor descriptor_from(int d, const std::string& kappa, std::int64_t p) {
    OddPrime prime(p);
    if (d == 3) return descriptor_3d(prime);
    if (kappa.empty()) throw StructureError("--kappa is required for d=2");
    return descriptor_2d(kappa_from_name(kappa), prime);
}

ResidueMatrix parse_matrix(const std::string& text, const GroupDescriptor& desc, int level) {
    if (text == "I" || text == "identity")
        return ResidueMatrix::identity(OddPrime(desc.p), level, desc.d);
    return ResidueMatrix::decode(OddPrime(desc.p), level, desc.d, text);
}

std::string plain(const json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// ------------------------------------------------------------------- orders

int cmd_orders(const GlobalOpts& g, int d, const std::string& kappa, std::int64_t p, int n_max) {
    std::vector<GroupDescriptor> descs;
    if (d == 2) {
        if (kappa.empty())
            for (KappaLabel k : {KappaLabel::MinusV, KappaLabel::P, KappaLabel::UP})
                descs.push_back(descriptor_2d(k, OddPrime(p)));
        else
            descs.push_back(descriptor_from(d, kappa, p));
    } else {
        descs.push_back(descriptor_3d(OddPrime(p)));
    }

    json rows = json::array();
    bool all_match = true;
    for (const GroupDescriptor& desc : descs) {
        for (int n = 1; n <= n_max; ++n) {
            json row{{"d", desc.d}, {"kappa", kappa_name(desc.kappa)}, {"p", desc.p}, {"n", n}};
            Int formula = order_formula(desc, n);
            row["formula_order"] = formula.str();
            std::optional<std::uint64_t> enumerated;
            try {
                GroupTable t = enumerate_table(desc, n, g.budgets);
                enumerated = t.size();
                row["enumerated_order"] = t.size();
            } catch (const CapacityExceeded&) {
                row["enumerated_order"] = "skipped";
            }
            std::optional<std::uint64_t> brute;
            try {
                GroupTable t = brute_force_Gtilde(desc, n, g.budgets);
                brute = t.size();
                row["brute_order"] = t.size();
            } catch (const CapacityExceeded&) {
                row["brute_order"] = "skipped";
            }
            std::string match = "skipped";
            if (enumerated) {
                bool ok = Int(*enumerated) == formula && (!brute || *brute == *enumerated);
                match = ok ? "yes" : "no";
                if (!ok) all_match = false;
            } else if (brute) {
                match = (Int(*brute) == formula) ? "yes" : "no";
                if (match == "no") all_match = false;
            }
            row["match"] = match;
            rows.push_back(row);
        }
    }

    if (g.format == "json") {
        emit(g, json{{"schema", "padicrot/orders-v1"}, {"rows", rows}}.dump(2));
    } else if (g.format == "csv") {
        std::ostringstream out;
        out << "d,kappa,p,n,formula_order,enumerated_order,brute_order,match\n";
        for (const json& row : rows) {
            out << row["d"] << ',' << csv_escape(row["kappa"].get<std::string>()) << ','
                << row["p"] << ',' << row["n"] << ',' << row["formula_order"].get<std::string>()
                << ',' << plain(row["enumerated_order"]) << ','
                << (row.contains("brute_order") ? plain(row["brute_order"]) : "") << ','
                << row["match"].get<std::string>() << '\n';
        }
        emit(g, out.str());
    } else {
        std::ostringstream out;
        for (const json& row : rows) {
            out << "d=" << row["d"] << " kappa=" << row["kappa"].get<std::string>()
                << " p=" << row["p"] << " n=" << row["n"] << ": formula "
                << row["formula_order"].get<std::string>() << ", enumerated "
                << plain(row["enumerated_order"]) << ", brute "
                << (row.contains("brute_order") ? plain(row["brute_order"]) : "-") << " => "
                << row["match"].get<std::string>() << '\n';
        }
        emit(g, out.str());
    }
    return all_match ? kExitOk : kExitCheckFailure;
}

// ---------------------------------------------------------------- enumerate

int cmd_enumerate(const GlobalOpts& g, int d, const std::string& kappa, std::int64_t p, int n,
                  const std::string& oracle) {
    GroupDescriptor desc = descriptor_from(d, kappa, p);
    std::optional<GroupTable> param, brute;
    if (oracle == "param" || oracle == "both") param = enumerate_table(desc, n, g.budgets);
    if (oracle == "brute" || oracle == "both") brute = brute_force_Gtilde(desc, n, g.budgets);

    bool equal = true;
    if (param && brute) {
        equal = param->size() == brute->size();
        if (equal)
            for (std::uint32_t i = 0; i < param->size(); ++i)
                if (!(param->at(i) == brute->at(i))) {
                    equal = false;
                    break;
                }
    }

    const GroupTable& table = param ? *param : *brute;
    json j = to_json(table);
    j["oracle"] = oracle;
    if (param && brute) j["oracle_match"] = equal;
    emit(g, j.dump(2));
    return equal ? kExitOk : kExitCheckFailure;
}

// ------------------------------------------------------------------ measure

// Tiny recursive-descent parser for set expressions over named sets:
//   expr   := term (('|') term)*
//   term   := factor (('&' | '\') factor)*
//   factor := '!' factor | NAME | '(' expr ')'
class SetExpr {
public:
    SetExpr(const std::map<std::string, CylinderSet>& names, const std::string& text)
        : names_(names), text_(text) {}

    CylinderSet parse() {
        CylinderSet result = expr();
        skip_ws();
        if (pos_ != text_.size()) throw StructureError("trailing input in expression");
        return result;
    }

private:
    const std::map<std::string, CylinderSet>& names_;
    std::string text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    CylinderSet expr() {
        CylinderSet left = term();
        while (eat('|')) left = left.unite(term());
        return left;
    }
    CylinderSet term() {
        CylinderSet left = factor();
        while (true) {
            if (eat('&')) {
                left = left.intersect(factor());
            } else if (eat('\\')) {
                left = left.difference(factor());
            } else {
                return left;
            }
        }
    }
    CylinderSet factor() {
        if (eat('!')) return factor().complement();
        if (eat('(')) {
            CylinderSet inner = expr();
            if (!eat(')')) throw StructureError("missing ')' in expression");
            return inner;
        }
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) throw StructureError("expected a set name in expression");
        std::string name = text_.substr(start, pos_ - start);
        auto it = names_.find(name);
        if (it == names_.end()) throw StructureError("unknown set name '" + name + "'");
        return it->second;
    }
};

int cmd_measure(const GlobalOpts& g, int d, const std::string& kappa, std::int64_t p,
                const std::vector<std::string>& defs, const std::string& expr_text,
                const std::string& ball_enc, int ball_level) {
    GroupDescriptor desc = descriptor_from(d, kappa, p);
    GroupFamily family(desc, g.budgets);

    std::map<std::string, CylinderSet> names;
    for (const std::string& def : defs) {
        // NAME=ball:ENC@LEVEL
        auto eq = def.find('=');
        if (eq == std::string::npos) throw StructureError("--def needs NAME=ball:ENC@LEVEL");
        std::string name = def.substr(0, eq);
        std::string rest = def.substr(eq + 1);
        if (rest.rfind("ball:", 0) != 0) throw StructureError("--def supports ball:ENC@LEVEL");
        rest = rest.substr(5);
        auto at = rest.rfind('@');
        if (at == std::string::npos) throw StructureError("--def needs @LEVEL");
        int level = std::stoi(rest.substr(at + 1));
        ResidueMatrix center = parse_matrix(rest.substr(0, at), desc, level);
        names.emplace(name, ball(family, center, level));
    }

    CylinderSet set = [&] {
        if (!expr_text.empty()) return SetExpr(names, expr_text).parse();
        if (!ball_enc.empty()) {
            ResidueMatrix center = parse_matrix(ball_enc, desc, ball_level);
            return ball(family, center, ball_level);
        }
        throw StructureError("measure needs --expr or --ball");
    }();

    Rat mu = set.measure();
    json j{{"schema", "padicrot/measure-v1"},
           {"descriptor", descriptor_to_json(desc)},
           {"level", set.level()},
           {"members", set.member_count()},
           {"measure", rational_string(mu)},
           {"decimal", decimal_string(mu)}};
    if (g.format == "json") {
        emit(g, j.dump(2));
    } else {
        emit(g, rational_string(mu) + " (" + decimal_string(mu) + ")");
    }
    return kExitOk;
}

// ------------------------------------------------------------------- sample

int cmd_sample(const GlobalOpts& g, int d, const std::string& kappa, std::int64_t p, int level,
               int count, std::uint64_t seed) {
    GroupDescriptor desc = descriptor_from(d, kappa, p);
    GroupFamily family(desc, g.budgets);
    std::mt19937_64 rng(seed);
    json arr = json::array();
    std::ostringstream lines;
    for (int i = 0; i < count; ++i) {
        ResidueMatrix m = sample_haar(family, level, rng);
        arr.push_back(m.encode());
        lines << m.encode() << '\n';
    }
    if (g.format == "json") {
        emit(g, json{{"schema", "padicrot/sample-v1"},
                     {"descriptor", descriptor_to_json(desc)},
                     {"level", level},
                     {"seed", seed},
                     {"samples", arr}}
                    .dump(2));
    } else {
        emit(g, lines.str());
    }
    return kExitOk;
}

// --------------------------------------------------------------------- lift

int cmd_lift(const GlobalOpts& g, int d, const std::string& kappa, std::int64_t p, int n,
             const std::string& matrix_enc, int to_level, const std::string& policy, bool set_only) {
    GroupDescriptor desc = descriptor_from(d, kappa, p);
    ResidueMatrix m = parse_matrix(matrix_enc, desc, n);

    if (set_only) {
        std::vector<ResidueMatrix> lifts = lift_once(m, desc.kappa);
        json arr = json::array();
        for (const ResidueMatrix& l : lifts) arr.push_back(l.encode());
        emit(g, json{{"schema", "padicrot/lift-v1"},
                     {"descriptor", descriptor_to_json(desc)},
                     {"from_level", n},
                     {"to_level", n + 1},
                     {"lift_count", lifts.size()},
                     {"lifts", arr}}
                    .dump(2));
        return kExitOk;
    }

    LiftChooser chooser = LiftChooser::zeros();
    if (policy.rfind("seed=", 0) == 0)
        chooser = LiftChooser::seeded(std::strtoull(policy.c_str() + 5, nullptr, 10));
    else if (policy != "zero")
        throw StructureError("--policy must be 'zero' or 'seed=K'");

    ResidueMatrix lifted = lift_to_precision(m, desc.kappa, to_level, chooser);
    json tower = json::array();
    for (int level = n; level <= to_level; ++level) tower.push_back(lifted.project(level).encode());
    emit(g, json{{"schema", "padicrot/lift-v1"},
                 {"descriptor", descriptor_to_json(desc)},
                 {"from_level", n},
                 {"to_level", to_level},
                 {"policy", policy},
                 {"tower", tower}}
                .dump(2));
    return kExitOk;
}

// ------------------------------------------------------------------ cardano

json triple_to_json(const CardanoTriple& t) {
    auto one = [](const BranchedParam& b) {
        return json{{"sigma", b.sigma.value().str()},
                    {"branch", b.branch == Branch::Principal ? "principal" : "flipped"}};
    };
    return json{{"xi", one(t.xi)}, {"eta", one(t.eta)}, {"zeta", one(t.zeta)}};
}

int cmd_cardano(const GlobalOpts& g, std::int64_t p, int n, const std::string& element_enc) {
    OddPrime prime(p);
    GroupDescriptor desc = descriptor_3d(prime);
    ResidueMatrix target = parse_matrix(element_enc, desc, n);

    CardanoScan scan = cardano_scan(prime, n, g.budgets);
    std::uint32_t ordinal = scan.table->index_of(target);
    const auto& triples = scan.triples[ordinal];

    json arr = json::array();
    for (const CardanoTriple& t : triples) arr.push_back(triple_to_json(t));
    json j{{"schema", "padicrot/cardano-v1"},
           {"descriptor", descriptor_to_json(desc)},
           {"level", n},
           {"element", target.encode()},
           {"decompositions", arr}};
    bool two = triples.size() == 2;
    j["exactly_two"] = two;
    if (two) {
        j["partner_consistent"] = (cardano_partner(triples[0]) == triples[1]) &&
                                  (cardano_partner(triples[1]) == triples[0]);
    }
    emit(g, j.dump(2));
    return two ? kExitOk : kExitCheckFailure;
}

// ---------------------------------------------------------------------- rot

int cmd_rot(const GlobalOpts& g, int d, const std::string& kappa, const std::string& axis,
            std::int64_t p, int n, std::int64_t sigma, const std::string& branch) {
    OddPrime prime(p);
    Branch b = branch == "flipped" ? Branch::Flipped : Branch::Principal;
    BranchedParam param{ResidueInt(prime, n, sigma), b};
    ResidueMatrix m = [&] {
        if (d == 2) return rot2(kappa_from_name(kappa), param);
        if (axis == "x") return rot3_axis(Axis::X, param);
        if (axis == "y") return rot3_axis(Axis::Y, param);
        if (axis == "z") return rot3_axis(Axis::Z, param);
        throw StructureError("--axis must be one of x, y, z for d=3");
    }();

    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    emit(g, json{{"schema", "padicrot/rot-v1"},
                 {"p", p},
                 {"n", n},
                 {"d", d},
                 {"rows", rows},
                 {"digits", m.encode()}}
                .dump(2));
    return kExitOk;
}

// ------------------------------------------------------------------- verify

int cmd_verify(const GlobalOpts& g, const verify::Options& vopts) {
    std::vector<verify::CriterionReport> reports = verify::run_all(vopts);
    bool any_fail = false, any_skip = false;

    json jreports = json::array();
    std::ostringstream pretty;
    for (const auto& report : reports) {
        json checks = json::array();
        for (const auto& c : report.checks) {
            checks.push_back(json{{"name", c.name},
                                  {"claim", c.claim},
                                  {"computed", c.computed},
                                  {"expected", c.expected},
                                  {"status", verify::status_name(c.status)}});
            if (c.status == verify::Status::Fail) any_fail = true;
            if (c.status == verify::Status::Skipped) any_skip = true;
        }
        jreports.push_back(json{{"criterion", report.number},
                                {"title", report.title},
                                {"passed", report.passed()},
                                {"checks", checks}});
        pretty << "criterion " << report.number << " (" << report.title
               << "): " << (report.passed() ? "PASS" : "FAIL")
               << (report.any_skipped() ? " (with skips)" : "") << '\n';
        for (const auto& c : report.checks) {
            if (c.status != verify::Status::Pass)
                pretty << "  [" << verify::status_name(c.status) << "] " << c.name << ": "
                       << c.claim << " -- " << c.computed << '\n';
        }
    }

    if (g.format == "json") {
        emit(g, json{{"schema", "padicrot/verify-v1"}, {"criteria", jreports}}.dump(2));
    } else {
        emit(g, pretty.str());
    }
    if (any_fail) return kExitCheckFailure;
    if (any_skip) return kExitBudget;
    return kExitOk;
}

// --------------------------------------------------------------- compare-integral

int cmd_compare_integral(const GlobalOpts& g, std::optional<std::int64_t> only_p, int n_max) {
    json rows = json::array();
    bool all_equal = true;
    for (std::int64_t p : {3, 5, 7}) {
        if (only_p && *only_p != p) continue;
        OddPrime prime(p);
        for (KappaLabel kappa : {KappaLabel::MinusV, KappaLabel::P, KappaLabel::UP}) {
            GroupFamily family(descriptor_2d(kappa, prime), g.budgets);
            for (int n = 1; n <= n_max; ++n) {
                MeasureComparison cmp = compare_measures(kappa, prime, n, family);
                all_equal = all_equal && cmp.equal;
                rows.push_back(json{{"kappa", kappa_name(kappa)},
                                    {"p", p},
                                    {"n", n},
                                    {"integral_value", rational_string(cmp.integral_value)},
                                    {"counting_value", rational_string(cmp.counting_value)},
                                    {"equal", cmp.equal}});
            }
        }
    }
    if (g.format == "json") {
        emit(g, json{{"schema", "padicrot/compare-integral-v1"}, {"rows", rows}}.dump(2));
    } else {
        std::ostringstream out;
        out << "kappa,p,n,integral_value,counting_value,equal\n";
        for (const json& row : rows)
            out << row["kappa"].get<std::string>() << ',' << row["p"] << ',' << row["n"] << ','
                << row["integral_value"].get<std::string>() << ','
                << row["counting_value"].get<std::string>() << ','
                << (row["equal"].get<bool>() ? "yes" : "no") << '\n';
        emit(g, out.str());
    }
    return all_equal ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic on compact p-adic rotation groups"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--max-table", g.budgets.max_table, "enumeration budget (elements)");
    app.add_option("--max-candidates", g.budgets.max_candidates, "brute-force budget (candidates)");
    app.add_option("--format", g.format, "output format: pretty, json, csv")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    app.add_option("--out", g.out_path, "write output to a file instead of stdout");

    int d = 2, n = 1, n_max = 3, to_level = 2, count = 1, level = 1, ball_level = 1;
    std::int64_t p = 3, sigma = 0;
    std::uint64_t seed = 0;
    std::string kappa, axis, oracle = "param", matrix_enc = "I", policy = "zero", branch = "principal";
    std::string expr_text, ball_enc;
    std::vector<std::string> defs;
    bool set_only = false;

    // global options may appear after the subcommand name
    app.fallthrough();

    auto* orders = app.add_subcommand("orders", "closed-form vs enumerated vs brute-force orders");
    orders->add_option("--d", d)->required()->check(CLI::IsMember({2, 3}));
    orders->add_option("--kappa", kappa, "-v, p or up (default: all three)");
    orders->add_option("--p", p)->required();
    orders->add_option("--n-max", n_max);

    auto* enumerate = app.add_subcommand("enumerate", "dump a finite quotient as JSON");
    enumerate->add_option("--d", d)->required()->check(CLI::IsMember({2, 3}));
    enumerate->add_option("--kappa", kappa);
    enumerate->add_option("--p", p)->required();
    enumerate->add_option("--n", n)->required();
    enumerate->add_option("--oracle", oracle)->check(CLI::IsMember({"param", "brute", "both"}));

    auto* measure = app.add_subcommand("measure", "exact measure of cylinder-set expressions");
    measure->add_option("--d", d)->check(CLI::IsMember({2, 3}));
    measure->add_option("--kappa", kappa);
    measure->add_option("--p", p)->required();
    measure->add_option("--def", defs, "named ball: NAME=ball:ENC@LEVEL (repeatable)");
    measure->add_option("--expr", expr_text, "set expression over names: |, &, \\, !, ()");
    measure->add_option("--ball", ball_enc, "single ball center encoding (or I)");
    measure->add_option("--n", ball_level, "ball radius level");

    auto* sample = app.add_subcommand("sample", "uniform Haar samples as digit strings");
    sample->add_option("--d", d)->check(CLI::IsMember({2, 3}));
    sample->add_option("--kappa", kappa);
    sample->add_option("--p", p)->required();
    sample->add_option("--level", level)->required();
    sample->add_option("--count", count);
    sample->add_option("--seed", seed);

    auto* lift = app.add_subcommand("lift", "Hensel lifts: full set or a chosen tower");
    lift->add_option("--d", d)->check(CLI::IsMember({2, 3}));
    lift->add_option("--kappa", kappa);
    lift->add_option("--p", p)->required();
    lift->add_option("--n", n)->required();
    lift->add_option("--matrix", matrix_enc, "encoding at level n, or I");
    lift->add_option("--to-level", to_level);
    lift->add_option("--policy", policy, "zero or seed=K");
    lift->add_flag("--set", set_only, "print all lifts one level up instead of a tower");

    auto* cardano = app.add_subcommand("cardano", "the two Cardano decompositions of an element");
    cardano->add_option("--p", p)->required();
    cardano->add_option("--n", n)->required();
    cardano->add_option("--element", matrix_enc, "element encoding, or I")->required();

    auto* rot = app.add_subcommand("rot", "a parametrized rotation matrix as JSON rows");
    rot->add_option("--d", d)->required()->check(CLI::IsMember({2, 3}));
    rot->add_option("--kappa", kappa);
    rot->add_option("--axis", axis)->check(CLI::IsMember({"x", "y", "z"}));
    rot->add_option("--p", p)->required();
    rot->add_option("--n", n)->required();
    rot->add_option("--sigma", sigma);
    rot->add_option("--branch", branch)->check(CLI::IsMember({"principal", "flipped"}));

    verify::Options vopts;
    auto* verify_cmd = app.add_subcommand("verify", "run the quantitative verification suite");
    verify_cmd->add_option("--only", vopts.only_checks,
                           "criteria keywords: orders oracle hensel cardano ball invariance "
                           "integral sampler");
    std::int64_t verify_p = 0;
    verify_cmd->add_option("--p", verify_p, "restrict grids to one prime");
    verify_cmd->add_option("--seed", vopts.base_seed);
    verify_cmd->add_option("--draws", vopts.sample_draws);
    verify_cmd->add_flag("--selftest-tamper", vopts.tamper,
                         "negative control: flip one expectation and fail");

    auto* cmp = app.add_subcommand("compare-integral",
                                   "integral vs counting Haar measures, per (kappa, p, n)");
    std::int64_t cmp_p = 0;
    cmp->add_option("--p", cmp_p, "restrict to one prime");
    cmp->add_option("--n-max", n_max);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (orders->parsed()) return cmd_orders(g, d, kappa, p, n_max);
        if (enumerate->parsed()) return cmd_enumerate(g, d, kappa, p, n, oracle);
        if (measure->parsed()) return cmd_measure(g, d, kappa, p, defs, expr_text, ball_enc, ball_level);
        if (sample->parsed()) return cmd_sample(g, d, kappa, p, level, count, seed);
        if (lift->parsed()) return cmd_lift(g, d, kappa, p, n, matrix_enc, to_level, policy, set_only);
        if (cardano->parsed()) return cmd_cardano(g, p, n, matrix_enc);
        if (rot->parsed()) return cmd_rot(g, d, kappa, axis, p, n, sigma, branch);
        if (verify_cmd->parsed()) {
            vopts.budgets = g.budgets;
            if (verify_p != 0) vopts.only_p = verify_p;
            return cmd_verify(g, vopts);
        }
        if (cmp->parsed()) {
            std::optional<std::int64_t> only;
            if (cmp_p != 0) only = cmp_p;
            return cmd_compare_integral(g, only, n_max);
        }
    } catch (const CapacityExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
