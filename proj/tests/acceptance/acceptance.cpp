// Acceptance gate: one line per criterion, [PASS]/[FAIL], nonzero exit on
// any failure.  argv[1] is the path to the CLI binary (used by the
// determinism criterion); everything else goes through the library.
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mnesor/checker.hpp"
#include "mnesor/dsl.hpp"
#include "mnesor/lattice_model.hpp"
#include "mnesor/seq_model.hpp"
#include "mnesor/structure.hpp"

using namespace mnesor;
namespace d = mnesor::dsl;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int idx, const std::string& label, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << label;
    if (!ok && !detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    if (!ok) ++g_failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---- criterion 1: built-in lattice validation -----------------------------

void criterion_lattice_validation() {
    auto t0 = Clock::now();
    std::string bad;
    std::vector<FiniteLattice> all;
    for (int k = 0; k <= 4; ++k) {
        std::vector<std::string> atoms;
        for (int i = 0; i < k; ++i) atoms.push_back(std::string(1, char('a' + i)));
        all.push_back(powerset_lattice(atoms));
    }
    for (int n = 1; n <= 6; ++n) all.push_back(chain_lattice(n));
    all.push_back(diamond_m3());
    all.push_back(pentagon_n5());
    all.push_back(product_lattice(chain_lattice(2), chain_lattice(3)));
    for (const FiniteLattice& l : all) {
        auto v = l.validate();
        if (!v.empty()) {
            bad += l.descriptor() + ": " + v.front().law + "; ";
        }
    }
    double dt = seconds_since(t0);
    bool ok = bad.empty() && dt < 1.0;
    report(1, "built-in lattices validate cleanly in < 1 s", ok,
           bad.empty() ? ("took " + std::to_string(dt) + " s") : bad);
}

// ---- criterion 2: worked-example golden suite ----------------------------

void criterion_examples() {
    std::string detail;
    try {
        SeqFixture fx = load_seq_fixture(std::string(MNESOR_DATA_DIR) + "/geo.json");
        SeqSpace s(fx.universe);
        d::Environment env;
        env.space = &s;
        for (const auto& [name, mask] : fx.granulars) env.granulars[name] = mask;
        const std::vector<std::pair<std::string, std::string>> cases = {
            {"[Germany Luxembourg] + [France Poland]", "[Germany Luxembourg France Poland]"},
            {"[Slovenia] + [Slovakia]", "[Slovenia Slovakia]"},
            {"[Slovakia] + [Slovenia]", "[Slovakia Slovenia]"},
            {"[France Russia Sweden] * EU", "[France Sweden]"},
            {"[Germany] * UN", "[Germany]"},
            {"([Italy] + [Switzerland]) * NATO", "[Italy]"},
            {"[Spain] + [Spain]", "[Spain]"},
            {"[Denmark Norway] + [Denmark]", "[Denmark Norway]"},
            {"[France Russia Italy] * EU", "[France Italy]"},
            {"[India Taiwan] * EU", "[]"},
            {"[France Germany] * IOC", "[France Germany]"},
        };
        for (const auto& [src, want] : cases) {
            std::string got = s.render(d::eval(*d::parse(src), env));
            if (got != want) detail += src + " -> " + got + " (want " + want + "); ";
        }
    } catch (const std::exception& e) {
        detail = e.what();
    }
    report(2, "geo fixture worked examples evaluate bit-exactly through the DSL",
           detail.empty(), detail);
}

// ---- criterion 3: self-action compliance ---------------------------------

void criterion_self_action() {
    std::string detail;
    std::vector<FiniteLattice> distributive;
    distributive.push_back(two_point_lattice());
    for (int n = 1; n <= 6; ++n) distributive.push_back(chain_lattice(n));
    for (int k = 0; k <= 4; ++k) {
        std::vector<std::string> atoms;
        for (int i = 0; i < k; ++i) atoms.push_back(std::string(1, char('a' + i)));
        distributive.push_back(powerset_lattice(atoms));
    }
    distributive.push_back(product_lattice(chain_lattice(2), chain_lattice(3)));
    for (const FiniteLattice& l : distributive) {
        auto s = make_self_action(l);
        ComplianceReport r = check_all(*s);
        if (!r.total) {
            detail += s->descriptor() + ": enumeration truncated; ";
            continue;
        }
        for (const LawResult& lr : r.laws)
            if (lr.status != LawStatus::Pass)
                detail += s->descriptor() + "/" + lr.law + " " + to_string(lr.status) + "; ";
    }
    for (FiniteLattice l : {diamond_m3(), pentagon_n5()}) {
        auto s = make_self_action(l);
        ComplianceReport r = check_all(*s);
        bool found = false;
        for (const LawResult& lr : r.laws) {
            if (lr.status != LawStatus::Fail) continue;
            if (lr.law != "A-MDIST" && lr.law != "A-GDIST") continue;
            if (!lr.counterexample) {
                detail += s->descriptor() + "/" + lr.law + " missing counterexample; ";
                continue;
            }
            if (!violates(*s, catalog()[lr.law], *lr.counterexample)) {
                detail += s->descriptor() + "/" + lr.law + " unsound counterexample; ";
                continue;
            }
            found = true;
        }
        if (!found) detail += s->descriptor() + ": no distributivity failure detected; ";
    }
    report(3, "self-action model: full pass on distributive lattices, sound failures on M3/N5",
           detail.empty(), detail);
}

// ---- criterion 4: seq compliance matrix vs committed golden --------------

void criterion_golden_matrix() {
    std::string detail;
    try {
        SeqSpace s{Universe({"a", "b", "c"})};
        ComplianceReport r = check_all(s);
        if (!r.total) detail += "enumeration truncated; ";
        auto ours = nlohmann::json::parse(report_json(r));
        std::ifstream in(std::string(MNESOR_GOLDEN_DIR) + "/seq_u3_expected.json");
        if (!in.good()) throw std::runtime_error("golden file missing");
        auto golden = nlohmann::json::parse(in);
        if (ours.at("model") != golden.at("model")) detail += "model mismatch; ";
        if (ours.at("lattice") != golden.at("lattice")) detail += "lattice mismatch; ";
        const auto& glaws = golden.at("laws");
        const auto& olaws = ours.at("laws");
        if (olaws.size() != glaws.size()) {
            detail += "law count mismatch; ";
        } else {
            for (std::size_t i = 0; i < glaws.size(); ++i) {
                std::string name = glaws[i].at("name").get<std::string>();
                if (olaws[i].at("name") != glaws[i].at("name") ||
                    olaws[i].at("status") != glaws[i].at("status") ||
                    olaws[i].at("instances") != glaws[i].at("instances")) {
                    detail += name + " diverges; ";
                    continue;
                }
                bool gnull = glaws[i].at("counterexample").is_null();
                bool onull = !olaws[i].contains("counterexample");
                if (gnull != onull ||
                    (!gnull && olaws[i].at("counterexample") != glaws[i].at("counterexample")))
                    detail += name + " counterexample diverges; ";
            }
        }
    } catch (const std::exception& e) {
        detail += e.what();
    }
    report(4, "seq |U|=3 compliance matrix reproduces the committed golden", detail.empty(),
           detail);
}

// ---- criterion 5: structure closed forms ---------------------------------

void criterion_structure() {
    std::string detail;
    for (int n = 1; n <= 3 && detail.empty(); ++n) {
        std::vector<std::string> atoms;
        for (int i = 0; i < n; ++i) atoms.push_back(std::string(1, char('a' + i)));
        SeqSpace s{Universe(atoms)};
        auto [values, total] = s.enumerate(10000);
        if (!total) {
            detail = "enumeration truncated";
            break;
        }
        const FiniteLattice& l = s.lattice();
        for (const auto& x : values) {
            ElemId sup = std::any_cast<const SeqMnesor&>(x).size()
                             ? support_mask(std::any_cast<const SeqMnesor&>(x))
                             : 0;
            Sublattice st = stabilizers(s, x);
            Sublattice an = annihilators(s, x);
            for (ElemId g = 0; g < static_cast<ElemId>(l.size()); ++g) {
                if (st.contains(g) != ((g & sup) == sup))
                    detail += "stabilizer shape off at " + s.render(x) + "; ";
                if (an.contains(g) != ((g & sup) == 0))
                    detail += "annihilator shape off at " + s.render(x) + "; ";
            }
            if (!st.closed() || !an.closed()) detail += "closure fails at " + s.render(x) + "; ";
            for (const auto& y : values) {
                for (const Granular& w : absorption_witnesses(s, x, y)) {
                    if (!s.equal(s.act(x, w.id()), x)) {
                        detail += "witness " + w.lattice().label(w.id()) + " for x=" +
                                  s.render(x) + ", y=" + s.render(y) + " is not a stabilizer; ";
                    }
                }
            }
            if (!detail.empty()) break;
        }
    }
    report(5, "stabilizer/annihilator closed forms and witness-stabilizer property at |U| <= 3",
           detail.empty(), detail);
}

// ---- criterion 6: deterministic reports ----------------------------------

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void criterion_determinism(const std::string& cli) {
    std::string detail;
    if (cli.empty()) {
        report(6, "byte-identical check reports across runs and --jobs", false,
               "CLI path not supplied");
        return;
    }
    std::string dir = "acceptance_tmp";
    if (std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) != 0) {
        report(6, "byte-identical check reports across runs and --jobs", false,
               "cannot create scratch directory");
        return;
    }
    auto run = [&](const std::string& args, const std::string& out) {
        std::string cmd = cli + " check --universe a,b,c " + args + " --out " + dir + "/" + out +
                          " > /dev/null 2>&1";
        return std::system(cmd.c_str());
    };
    int rc1 = run("", "r1.json");
    int rc2 = run("", "r2.json");
    int rc3 = run("--jobs 4", "r3.json");
    int rc4 = run("--jobs 4", "r4.json");
    if (rc1 < 0 || rc2 < 0 || rc3 < 0 || rc4 < 0) detail += "CLI invocation failed; ";
    std::string a = slurp(dir + "/r1.json"), b = slurp(dir + "/r2.json"),
                c = slurp(dir + "/r3.json"), e = slurp(dir + "/r4.json");
    if (a.empty()) detail += "empty report; ";
    if (a.find("A-GDIST") == std::string::npos) detail += "report lacks law rows; ";
    if (a != b) detail += "sequential runs differ; ";
    if (c != e) detail += "parallel runs differ; ";
    if (a != c) detail += "parallel differs from sequential; ";
    if (std::system(("rm -rf " + dir).c_str()) != 0) detail += "scratch cleanup failed; ";
    report(6, "byte-identical check reports across runs and --jobs", detail.empty(), detail);
}

// ---- criterion 7: DSL round-trip fixpoint --------------------------------

// Systematic tree generator: every shape of depth <= 5 over a small pool of
// leaves and operators, counted and bounded.
struct TreeGen {
    std::vector<d::ExprPtr> mleaves, gleaves;
    int made = 0;

    d::ExprPtr node(d::Expr::Kind k, d::ExprPtr a = nullptr, d::ExprPtr b = nullptr) {
        auto e = std::make_shared<d::Expr>();
        e->kind = k;
        e->a = std::move(a);
        e->b = std::move(b);
        return e;
    }

    std::vector<d::ExprPtr> grans(int depth) {
        if (depth == 0) return gleaves;
        std::vector<d::ExprPtr> out = gleaves;
        auto sub = grans(depth - 1);
        for (std::size_t i = 0; i + 1 < sub.size(); i += 2) {
            out.push_back(node(d::Expr::Kind::Join, sub[i], sub[i + 1]));
            out.push_back(node(d::Expr::Kind::Meet, sub[i + 1], sub[i]));
        }
        return out;
    }

    std::vector<d::ExprPtr> mnesors(int depth) {
        if (depth == 0) return mleaves;
        std::vector<d::ExprPtr> out = mleaves;
        auto sub = mnesors(depth - 1);
        auto gs = grans(depth - 1);
        for (std::size_t i = 0; i + 1 < sub.size(); i += 2)
            out.push_back(node(d::Expr::Kind::Add, sub[i], sub[i + 1]));
        for (std::size_t i = 0; i < sub.size() && i < gs.size(); ++i)
            out.push_back(node(d::Expr::Kind::Act, sub[i], gs[i]));
        return out;
    }
};

void criterion_roundtrip() {
    std::string detail;
    TreeGen gen;
    auto leaf = [&](d::Expr::Kind k, std::vector<std::string> names, std::string name) {
        auto e = std::make_shared<d::Expr>();
        e->kind = k;
        e->names = std::move(names);
        e->name = std::move(name);
        return e;
    };
    gen.mleaves = {
        leaf(d::Expr::Kind::Tuple, {"a", "b"}, ""), leaf(d::Expr::Kind::Tuple, {}, ""),
        leaf(d::Expr::Kind::Zero, {}, ""),          leaf(d::Expr::Kind::MName, {}, "x"),
        leaf(d::Expr::Kind::Tuple, {"c"}, ""),      leaf(d::Expr::Kind::MName, {}, "y"),
    };
    gen.gleaves = {
        leaf(d::Expr::Kind::Set, {"a"}, ""),  leaf(d::Expr::Kind::Top, {}, ""),
        leaf(d::Expr::Kind::Bot, {}, ""),     leaf(d::Expr::Kind::GName, {}, "EU"),
        leaf(d::Expr::Kind::Set, {}, ""),     leaf(d::Expr::Kind::GName, {}, "NATO"),
    };
    // Breadth-limited systematic enumeration: all trees the generator yields
    // at depths 0..5, plus an exhaustive two-level product to push past 1000.
    std::vector<d::ExprPtr> trees;
    for (int depth = 0; depth <= 5; ++depth) {
        for (auto& t : gen.mnesors(depth)) trees.push_back(t);
        if (trees.size() > 400) break;
    }
    auto pool_m = gen.mnesors(2);
    auto pool_g = gen.grans(2);
    for (const auto& a : pool_m)
        for (const auto& b : pool_m) trees.push_back(gen.node(d::Expr::Kind::Add, a, b));
    for (const auto& a : pool_m)
        for (const auto& g : pool_g) trees.push_back(gen.node(d::Expr::Kind::Act, a, g));
    std::size_t checked = 0, failures = 0;
    for (const auto& t : trees) {
        std::string printed = d::print(*t);
        try {
            auto back = d::parse(printed);
            if (!d::structurally_equal(*t, *back)) {
                ++failures;
                if (detail.size() < 200) detail += "not fixed: " + printed + "; ";
            }
            std::string twice = d::print(*back);
            if (twice != printed) {
                ++failures;
                if (detail.size() < 200) detail += "print unstable: " + printed + "; ";
            }
        } catch (const std::exception& e) {
            ++failures;
            if (detail.size() < 200) detail += printed + ": " + e.what() + "; ";
        }
        ++checked;
    }
    if (checked < 1000) detail += "only " + std::to_string(checked) + " trees generated; ";

    // Positioned parse errors: offset plus a nonempty expectation set.
    const std::vector<std::pair<std::string, std::size_t>> broken = {
        {"[a b", 4}, {"[a +", 3}, {"+ [a]", 0},   {"[a] + ", 6},   {"[a] * ", 6},
        {"[a] [b]", 4}, {"(", 1},    {"[a] * ({x}", 10}, {"[a] ^ [b]", 4},
    };
    for (const auto& [src, off] : broken) {
        try {
            d::parse(src);
            detail += "no error for '" + src + "'; ";
        } catch (const d::ParseError& e) {
            if (e.offset() != off)
                detail += "'" + src + "' offset " + std::to_string(e.offset()) + " want " +
                          std::to_string(off) + "; ";
            if (e.expected().empty()) detail += "'" + src + "' empty expectation set; ";
            if (std::string(e.what()).find("offset") == std::string::npos)
                detail += "'" + src + "' message lacks offset; ";
        }
    }
    report(7, "parse-print-parse fixpoint on " + std::to_string(checked) +
               " systematic trees; positioned errors",
           failures == 0 && detail.empty(), detail);
}

}  // namespace

int main(int argc, char** argv) {
    auto t0 = Clock::now();
    std::string cli = argc > 1 ? argv[1] : "";
    criterion_lattice_validation();
    criterion_examples();
    criterion_self_action();
    criterion_golden_matrix();
    criterion_structure();
    criterion_determinism(cli);
    criterion_roundtrip();
    double dt = seconds_since(t0);
    report(8, "acceptance suite runtime budget (60 s)", dt < 60.0,
           "took " + std::to_string(dt) + " s");
    std::cout << (g_failures == 0 ? "acceptance: all criteria pass\n"
                                  : "acceptance: " + std::to_string(g_failures) + " failing\n");
    return g_failures == 0 ? 0 : 1;
}
